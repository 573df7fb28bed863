#include "freelaws/lawcheck/report.hpp"

#include <algorithm>
#include <sstream>

namespace freelaws::lawcheck {

namespace {

template <class T>
void merge_samples(std::vector<std::pair<CaseKey, T>>& into, const std::vector<std::pair<CaseKey, T>>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (into.size() > kMaxSamples) into.resize(kMaxSamples);
}

std::string tsv_field(std::string s) {
  for (auto& ch : s)
    if (ch == '\t' || ch == '\n') ch = ' ';
  return s;
}

}  // namespace

std::string_view status_name(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "fail";
    case LawStatus::not_applicable:
      return "n/a";
  }
  return "?";
}

const LawResult* CheckReport::law(const std::string& name) const {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

void Tally::add_failure(std::size_t law, CaseKey key, Failure f) {
  auto& t = laws_.at(law);
  ++t.failed;
  merge_samples(t.samples, {{key, std::move(f)}});
}

void Tally::add_note(CaseKey key, std::string note) {
  merge_samples(notes_, {{key, std::move(note)}});
}

void Tally::merge(const Tally& other) {
  if (laws_.size() < other.laws_.size()) laws_.resize(other.laws_.size());
  for (std::size_t i = 0; i < other.laws_.size(); ++i) {
    auto& a = laws_[i];
    const auto& b = other.laws_[i];
    a.checked += b.checked;
    a.discarded += b.discarded;
    a.failed += b.failed;
    merge_samples(a.samples, b.samples);
    for (const auto& [k, v] : b.counters) a.counters[k] += v;
  }
  merge_samples(notes_, other.notes_);
}

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " on " << r.container << '\n';
  std::size_t width = 0;
  for (const auto& l : r.laws) width = std::max(width, l.name.size());
  for (const auto& l : r.laws) {
    os << "  " << l.name << std::string(width - l.name.size() + 2, ' ');
    if (l.status == LawStatus::not_applicable) {
      os << "not applicable";
    } else {
      os << (l.status == LawStatus::pass ? "PASS" : "FAIL") << "  checked=" << l.checked
         << " discarded=" << l.discarded;
      if (l.failed > 0) os << " failed=" << l.failed;
    }
    if (!l.detail.empty()) os << "  [" << l.detail << ']';
    os << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  for (const auto& f : r.failures) {
    os << "  counterexample (" << f.law << ")\n"
       << "    inputs: " << f.inputs << '\n'
       << "    lhs:    " << f.lhs << '\n'
       << "    rhs:    " << f.rhs << '\n';
  }
  os << "  total: checked=" << r.cases_checked << " discarded=" << r.cases_discarded
     << " failures=" << r.failure_count << " -> " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_tsv(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& l : r.laws)
    os << r.suite << '\t' << l.name << '\t' << status_name(l.status) << '\t' << l.checked << '\t'
       << l.discarded << '\t' << tsv_field(l.detail) << '\n';
  return os.str();
}

}  // namespace freelaws::lawcheck
