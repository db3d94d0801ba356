#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iip/cone.hpp"
#include "iip/indefinite.hpp"

namespace iip {

// A problem (M, N, A, K): A maps R^n (weight N) into R^m (weight M) and K is
// a cone in R^n.
class Instance {
 public:
  Instance(std::string label, Weight m, Weight n, RatMatrix a, PolyCone k);

  const std::string& label() const noexcept { return label_; }
  const Weight& m() const noexcept { return m_; }
  const Weight& n() const noexcept { return n_; }
  const RatMatrix& a() const noexcept { return a_; }
  const PolyCone& k() const noexcept { return k_; }

  IndefiniteSpace domain() const { return IndefiniteSpace(n_); }
  IndefiniteSpace codomain() const { return IndefiniteSpace(m_); }
  IMatrix as_imatrix() const { return IMatrix(a_, domain(), codomain()); }

  Instance relabeled(std::string label) const;

 private:
  std::string label_;
  Weight m_;
  Weight n_;
  RatMatrix a_;
  PolyCone k_;
};

// A point of `lhs` that lies outside `rhs`, refuting `lhs ⊆ rhs`.
struct Witness {
  std::string lhs;
  std::string rhs;
  RatVector point;
};

enum class Logic {
  Holds,    // conclusion must hold
  Implies,  // hypothesis => conclusion
  Iff,      // hypothesis <=> conclusion
};

const char* to_string(Logic logic);

struct CheckResult {
  std::string name;
  std::string statement;
  Logic logic = Logic::Holds;
  bool hypothesis_side = true;
  bool conclusion_side = true;
  // Whether the standing hypothesis M A = A N holds, i.e. whether the check is
  // a theorem on this instance rather than an observation.
  bool guaranteed = false;
  std::vector<Witness> witnesses;
  std::map<std::string, PolyCone> derived_cones;

  bool holds() const;
  // Guaranteed yet failing: a bug in the library or a false statement.
  bool defect() const { return guaranteed && !holds(); }
};

struct TheoremReport {
  std::string label;
  bool commutes = false;
  bool invariance = false;     // A^[+] o A o K ⊆ K
  bool range_closed = true;    // R(A o I) is closed; automatic in finite dimensions
  bool cond_i = false;         // D = (A^[+])^[*] o I o K^[*] is acute
  bool cond_ii = false;        // (A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I)
  bool cond_ii_strict = false; // (A^[*] o A)^[+] o K^[*] ⊆ K
  bool cond_iii = false;       // C = A o I o K is obtuse (intersecting with R(A o I))
  bool cond_iii_span = false;  // same with span C in place of R(A o I)
  bool equivalence_ok = false; // cond_i == cond_ii == cond_iii
  std::vector<CheckResult> conditions;
  std::vector<CheckResult> lemma_results;
  std::map<std::string, PolyCone> cones;
  std::map<std::string, RatMatrix> matrices;
  std::vector<std::string> notes;

  bool hypotheses_hold() const { return commutes && invariance; }
  bool theorem_falsified() const { return hypotheses_hold() && !equivalence_ok; }
  bool obtuse_discrepancy() const { return cond_iii != cond_iii_span; }
  bool lemma_defect() const;
  const CheckResult* find_lemma(const std::string& name) const;
};

// (commutes, invariance).
std::pair<bool, bool> check_hypotheses(const Instance& inst);

bool cond_i(const Instance& inst);
bool cond_ii(const Instance& inst);
bool cond_ii_strict(const Instance& inst);
bool cond_iii(const Instance& inst);

std::vector<CheckResult> check_lemma_chain(const Instance& inst);
TheoremReport verify_main(const Instance& inst);

}  // namespace iip
