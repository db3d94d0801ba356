#include "iip/render.hpp"

#include <algorithm>
#include <sstream>

namespace iip {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

const char* mark(const CheckResult& c) {
  if (c.holds()) {
    return "✓";
  }
  return c.guaranteed ? "✗ DEFECT" : "✗";
}

void table(std::ostringstream& out, const std::vector<CheckResult>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) {
    width = std::max(width, c.name.size());
  }
  for (const auto& c : checks) {
    out << "  " << mark(c) << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << c.statement;
    if (c.logic != Logic::Holds) {
      out << "  [" << to_string(c.logic) << "; hypothesis " << yes_no(c.hypothesis_side) << ", conclusion "
          << yes_no(c.conclusion_side) << "]";
    }
    out << '\n';
  }
}

void witnesses(std::ostringstream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    for (const auto& w : c.witnesses) {
      out << "  " << c.name << ": " << to_string(w.point) << " in " << w.lhs << " but not in " << w.rhs << '\n';
    }
  }
}

}  // namespace

std::string render_report(const TheoremReport& r, bool lemmas) {
  std::ostringstream out;
  out << "instance " << r.label << '\n';
  out << "  commutes: " << yes_no(r.commutes) << '\n';
  out << "  invariance: " << yes_no(r.invariance) << '\n';
  out << "  range_closed: " << yes_no(r.range_closed) << '\n';
  out << "  cond_i: " << yes_no(r.cond_i) << '\n';
  out << "  cond_ii: " << yes_no(r.cond_ii) << '\n';
  out << "  cond_ii_strict: " << yes_no(r.cond_ii_strict) << '\n';
  out << "  cond_iii: " << yes_no(r.cond_iii) << '\n';
  out << "  cond_iii_span: " << yes_no(r.cond_iii_span) << '\n';
  out << "  equivalence_ok: " << yes_no(r.equivalence_ok) << '\n';
  out << "  theorem_falsified: " << yes_no(r.theorem_falsified()) << '\n';
  out << "\nconditions\n";
  table(out, r.conditions);
  if (lemmas) {
    out << "\nlemmas\n";
    table(out, r.lemma_results);
  }
  std::vector<CheckResult> shown = r.conditions;
  if (lemmas) {
    shown.insert(shown.end(), r.lemma_results.begin(), r.lemma_results.end());
  }
  std::ostringstream w;
  witnesses(w, shown);
  if (!w.str().empty()) {
    out << "\nwitnesses\n" << w.str();
  }
  if (!r.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : r.notes) {
      out << "  - " << n << '\n';
    }
  }
  return out.str();
}

}  // namespace iip
