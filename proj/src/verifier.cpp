#include "iip/verifier.hpp"

#include <algorithm>

#include "iip/errors.hpp"
#include "iip/linalg.hpp"

namespace iip {

Instance::Instance(std::string label, Weight m, Weight n, RatMatrix a, PolyCone k)
    : label_(std::move(label)), m_(std::move(m)), n_(std::move(n)), a_(std::move(a)), k_(std::move(k)) {
  if (a_.rows() != m_.dim() || a_.cols() != n_.dim()) {
    throw DimensionError("instance '" + label_ + "': A is " + std::to_string(a_.rows()) + "x" +
                         std::to_string(a_.cols()) + " but M is " + std::to_string(m_.dim()) + "x" +
                         std::to_string(m_.dim()) + " and N is " + std::to_string(n_.dim()) + "x" +
                         std::to_string(n_.dim()));
  }
  if (k_.ambient_dim() != n_.dim()) {
    throw DimensionError("instance '" + label_ + "': K lives in R^" + std::to_string(k_.ambient_dim()) +
                         ", expected R^" + std::to_string(n_.dim()));
  }
}

Instance Instance::relabeled(std::string label) const {
  Instance copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

const char* to_string(Logic logic) {
  switch (logic) {
    case Logic::Holds:
      return "holds";
    case Logic::Implies:
      return "implies";
    case Logic::Iff:
      return "iff";
  }
  return "?";
}

bool CheckResult::holds() const {
  switch (logic) {
    case Logic::Holds:
      return conclusion_side;
    case Logic::Implies:
      return !hypothesis_side || conclusion_side;
    case Logic::Iff:
      return hypothesis_side == conclusion_side;
  }
  return false;
}

bool TheoremReport::lemma_defect() const {
  return std::any_of(lemma_results.begin(), lemma_results.end(), [](const CheckResult& c) { return c.defect(); });
}

const CheckResult* TheoremReport::find_lemma(const std::string& name) const {
  for (const auto& c : lemma_results) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

// Every object the conditions and lemmas are phrased in, built once.
struct Derived {
  IndefiniteSpace dom;
  IndefiniteSpace cod;
  IMatrix a;
  IMatrix a_i;          // A o I
  IMatrix a_i_adj;      // (A o I)^[*]
  IMatrix a_pinv;       // A^[+]
  IMatrix d_map;        // (A^[+])^[*] o I
  IMatrix gram;         // A^[*] o A
  IMatrix gram_pinv;    // (A^[*] o A)^[+]
  IMatrix projector;    // A^[+] o A
  std::map<std::string, PolyCone> cones;

  explicit Derived(const Instance& inst)
      : dom(inst.domain()),
        cod(inst.codomain()),
        a(inst.as_imatrix()),
        a_i(compose(a, identity_on(dom))),
        a_i_adj(iadjoint(a_i)),
        a_pinv(imp_inverse(a)),
        d_map(compose(iadjoint(a_pinv), identity_on(dom))),
        gram(compose(iadjoint(a), a)),
        gram_pinv(imp_inverse(gram)),
        projector(compose(a_pinv, a)) {}

  const PolyCone& cone(const std::string& label) const { return cones.at(label); }
  void put(const std::string& label, PolyCone k) { cones.insert_or_assign(label, std::move(k)); }
};

// Labels for the report's cone map.
constexpr const char* kK = "K";
constexpr const char* kKDual = "K_dual";
constexpr const char* kC = "C";
constexpr const char* kCDual = "C_dual";
constexpr const char* kD = "D";
constexpr const char* kDDual = "D_dual";
constexpr const char* kRange = "range_AI";
constexpr const char* kRangeAdj = "range_AI_adj";
constexpr const char* kNullAdj = "null_AI_adj";
constexpr const char* kNull = "null_AI";
constexpr const char* kSlice = "intersection_with_range";
constexpr const char* kSliceDual = "intersection_with_range_dual";
constexpr const char* kSpanSlice = "intersection_with_span";
constexpr const char* kDPlus = "D_plus_null_AI_adj";
constexpr const char* kCPlus = "C_plus_null_AI_adj";
constexpr const char* kKPlus = "sum_with_nullspace";
constexpr const char* kGramKDual = "gram_pinv_K_dual";
constexpr const char* kGramK = "gram_K";
constexpr const char* kGramKPlus = "gram_K_plus_null_AI";
constexpr const char* kKDualSlice = "K_dual_cap_range_AI_adj";
constexpr const char* kPK = "P_K";
constexpr const char* kPKDual = "P_K_dual";
constexpr const char* kPullback = "AI_adj_C_dual";

void build_cones(Derived& d, const Instance& inst) {
  const std::size_t m = d.cod.dim();
  const std::size_t n = d.dom.dim();
  const std::vector<RatVector> null_adj = ikernel_basis(d.a_i_adj);
  const std::vector<RatVector> null_ai = ikernel_basis(d.a_i);

  d.put(kK, inst.k());
  d.put(kKDual, dual_indefinite(inst.k(), d.dom));
  d.put(kC, image_cone(d.a_i.action(), inst.k()));
  d.put(kCDual, dual_indefinite(d.cone(kC), d.cod));
  d.put(kD, image_cone(d.d_map.action(), d.cone(kKDual)));
  d.put(kDDual, dual_indefinite(d.cone(kD), d.cod));
  d.put(kRange, span_cone(m, irange_basis(d.a_i)));
  d.put(kRangeAdj, span_cone(n, irange_basis(d.a_i_adj)));
  d.put(kNullAdj, span_cone(m, null_adj));
  d.put(kNull, span_cone(n, null_ai));
  d.put(kSlice, intersect(d.cone(kCDual), d.cone(kRange)));
  d.put(kSliceDual, dual_indefinite(d.cone(kSlice), d.cod));
  d.put(kSpanSlice, intersect(d.cone(kCDual), span_cone(m, d.cone(kC).span_basis())));
  d.put(kDPlus, sum_with_subspace(d.cone(kD), null_adj));
  d.put(kCPlus, sum_with_subspace(d.cone(kC), null_adj));
  d.put(kKPlus, sum_with_subspace(inst.k(), null_ai));
  d.put(kGramKDual, image_cone(d.gram_pinv.action(), d.cone(kKDual)));
  d.put(kGramK, image_cone(d.gram.action(), inst.k()));
  d.put(kGramKPlus, sum_with_subspace(d.cone(kGramK), null_ai));
  d.put(kKDualSlice, intersect(d.cone(kKDual), d.cone(kRangeAdj)));
  d.put(kPK, image_cone(d.projector.action(), inst.k()));
  d.put(kPKDual, image_cone(d.projector.action(), d.cone(kKDual)));
  d.put(kPullback, image_cone(d.a_i_adj.action(), d.cone(kCDual)));
}

struct Inclusion {
  bool holds = true;
  std::optional<Witness> witness;
};

Inclusion inclusion(const Derived& d, const std::string& lhs, const std::string& rhs) {
  Inclusion out;
  if (auto w = inclusion_witness(d.cone(rhs), d.cone(lhs))) {
    out.holds = false;
    out.witness = Witness{lhs, rhs, *w};
  }
  return out;
}

// Acuteness decided two independent ways; they must agree.
Inclusion acute(const Derived& d, const std::string& label, const std::string& dual_label,
                const IndefiniteSpace& space) {
  Inclusion out = inclusion(d, label, dual_label);
  if (out.holds != is_acute(d.cone(label), space)) {
    throw DefectError("pairwise and inclusion tests of acuteness disagree on " + label);
  }
  return out;
}

class CheckBuilder {
 public:
  CheckBuilder(const Derived& d, bool commuting) : d_(d), commuting_(commuting) {}

  CheckResult make(std::string name, std::string statement, Logic logic) const {
    CheckResult c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.logic = logic;
    c.guaranteed = commuting_;
    return c;
  }

  bool record(CheckResult& c, const Inclusion& inc, const std::string& lhs, const std::string& rhs) const {
    c.derived_cones.insert_or_assign(lhs, d_.cone(lhs));
    c.derived_cones.insert_or_assign(rhs, d_.cone(rhs));
    if (inc.witness) {
      c.witnesses.push_back(*inc.witness);
    }
    return inc.holds;
  }

  bool include(CheckResult& c, const std::string& lhs, const std::string& rhs) const {
    return record(c, inclusion(d_, lhs, rhs), lhs, rhs);
  }

 private:
  const Derived& d_;
  bool commuting_;
};

bool invariant_under(const RatMatrix& t, const PolyCone& k) {
  for (const auto& g : k.generators()) {
    if (!k.contains(t * g)) {
      return false;
    }
  }
  return true;
}

std::vector<CheckResult> lemma_chain(const Derived& d, bool commuting, bool invariance) {
  const CheckBuilder b(d, commuting);
  std::vector<CheckResult> out;

  {
    CheckResult c = b.make("adjoint_pairing", "[A o x, y] = [x, A^[*] o y] for all x, y", Logic::Holds);
    // Both sides as bilinear forms x^T F y.
    const RatMatrix lhs = d.a.action().transpose() * d.cod.w();
    const RatMatrix rhs = d.dom.w() * iadjoint(d.a).action();
    c.conclusion_side = lhs == rhs;
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("dual_image_pullback", "(A o I)^[*] o (A o I o K)^[*] ⊆ K^[*]", Logic::Holds);
    c.conclusion_side = b.include(c, kPullback, kKDual);
    out.push_back(std::move(c));
  }
  {
    CheckResult c =
        b.make("invariance_transfers_to_dual", "A^[+] o A o K ⊆ K  <=>  A^[+] o A o K^[*] ⊆ K^[*]", Logic::Iff);
    c.hypothesis_side = b.include(c, kPK, kK);
    c.conclusion_side = b.include(c, kPKDual, kKDual);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("dual_image_outer_bound", "(A o I o K)^[*] ⊆ D + N((A o I)^[*])", Logic::Holds);
    c.conclusion_side = b.include(c, kCDual, kDPlus);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("dual_image_exact_under_invariance",
                           "A^[+] o A o K ⊆ K  =>  D + N((A o I)^[*]) ⊆ (A o I o K)^[*]", Logic::Implies);
    c.hypothesis_side = invariance;
    c.conclusion_side = b.include(c, kDPlus, kCDual);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("dual_of_d_outer_bound", "D^[*] ⊆ A o I o K + N((A o I)^[*])", Logic::Holds);
    c.conclusion_side = b.include(c, kDDual, kCPlus);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("dual_of_d_exact_under_invariance",
                           "A^[+] o A o K ⊆ K  =>  A o I o K + N((A o I)^[*]) ⊆ D^[*]", Logic::Implies);
    c.hypothesis_side = invariance;
    c.conclusion_side = b.include(c, kCPlus, kDDual);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("range_slice_inside_d", "(A o I o K)^[*] ∩ R(A o I) ⊆ D", Logic::Holds);
    c.conclusion_side = b.include(c, kSlice, kD);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("range_slice_equals_d_under_invariance",
                           "A^[+] o A o K ⊆ K  =>  D ⊆ (A o I o K)^[*] ∩ R(A o I)", Logic::Implies);
    c.hypothesis_side = invariance;
    c.conclusion_side = b.include(c, kD, kSlice);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("range_slice_acute_iff_inside_c",
                           "A^[+] o A o K ⊆ K  =>  (L acute <=> L ⊆ A o I o K), L = (A o I o K)^[*] ∩ R(A o I)",
                           Logic::Implies);
    c.hypothesis_side = invariance;
    const bool is_acute_l = b.record(c, acute(d, kSlice, kSliceDual, d.cod), kSlice, kSliceDual);
    const bool inside_c = b.include(c, kSlice, kC);
    c.conclusion_side = is_acute_l == inside_c;
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("d_bound_iff_gram_bound",
                           "D ⊆ A o I o K + N((A o I)^[*])  <=>  (A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I)", Logic::Iff);
    c.hypothesis_side = b.include(c, kD, kCPlus);
    c.conclusion_side = b.include(c, kGramKDual, kKPlus);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("d_inside_c_implies_gram_bound",
                           "D ⊆ A o I o K  =>  (A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I)", Logic::Implies);
    c.hypothesis_side = b.include(c, kD, kC);
    c.conclusion_side = b.include(c, kGramKDual, kKPlus);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("gram_bound_implies_dual_slice_bound",
                           "(A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I)  =>  "
                           "K^[*] ∩ R((A o I)^[*]) ⊆ A^[*] o A o K + N(A o I)",
                           Logic::Implies);
    c.hypothesis_side = b.include(c, kGramKDual, kKPlus);
    c.conclusion_side = b.include(c, kKDualSlice, kGramKPlus);
    out.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("gram_bound_slack_iff_strict",
                           "A^[+] o A o K ⊆ K  =>  ((A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I) <=> "
                           "(A^[*] o A)^[+] o K^[*] ⊆ K)",
                           Logic::Implies);
    c.hypothesis_side = invariance;
    const bool slack = b.include(c, kGramKDual, kKPlus);
    const bool strict = b.include(c, kGramKDual, kK);
    c.conclusion_side = slack == strict;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::pair<bool, bool> check_hypotheses(const Instance& inst) {
  const IMatrix a = inst.as_imatrix();
  const IMatrix projector = compose(imp_inverse(a), a);
  return {commutes(a), invariant_under(projector.action(), inst.k())};
}

bool cond_i(const Instance& inst) {
  const IMatrix a = inst.as_imatrix();
  const IMatrix d_map = compose(iadjoint(imp_inverse(a)), identity_on(inst.domain()));
  return is_acute(image_cone(d_map.action(), dual_indefinite(inst.k(), inst.domain())), inst.codomain());
}

namespace {

PolyCone gram_pinv_image_of_dual(const Instance& inst) {
  const IMatrix a = inst.as_imatrix();
  const IMatrix gram_pinv = imp_inverse(compose(iadjoint(a), a));
  return image_cone(gram_pinv.action(), dual_indefinite(inst.k(), inst.domain()));
}

}  // namespace

bool cond_ii(const Instance& inst) {
  const IMatrix a_i = compose(inst.as_imatrix(), identity_on(inst.domain()));
  return includes(sum_with_subspace(inst.k(), ikernel_basis(a_i)), gram_pinv_image_of_dual(inst));
}

bool cond_ii_strict(const Instance& inst) { return includes(inst.k(), gram_pinv_image_of_dual(inst)); }

bool cond_iii(const Instance& inst) { return is_obtuse_image(inst.as_imatrix(), inst.k()); }

std::vector<CheckResult> check_lemma_chain(const Instance& inst) {
  Derived d(inst);
  build_cones(d, inst);
  const bool commuting = commutes(d.a);
  return lemma_chain(d, commuting, invariant_under(d.projector.action(), inst.k()));
}

TheoremReport verify_main(const Instance& inst) {
  Derived d(inst);
  build_cones(d, inst);

  TheoremReport r;
  r.label = inst.label();
  r.commutes = commutes(d.a);
  r.invariance = invariant_under(d.projector.action(), inst.k());

  const CheckBuilder b(d, false);
  {
    CheckResult c = b.make("cond_i", "D = (A^[+])^[*] o I o K^[*] is acute (D ⊆ D^[*])", Logic::Holds);
    c.conclusion_side = b.record(c, acute(d, kD, kDDual, d.cod), kD, kDDual);
    r.cond_i = c.conclusion_side;
    r.conditions.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("cond_ii", "(A^[*] o A)^[+] o K^[*] ⊆ K + N(A o I)", Logic::Holds);
    c.conclusion_side = b.include(c, kGramKDual, kKPlus);
    r.cond_ii = c.conclusion_side;
    r.conditions.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("cond_ii_strict", "(A^[*] o A)^[+] o K^[*] ⊆ K", Logic::Holds);
    c.conclusion_side = b.include(c, kGramKDual, kK);
    r.cond_ii_strict = c.conclusion_side;
    r.conditions.push_back(std::move(c));
  }
  {
    CheckResult c = b.make("cond_iii", "C = A o I o K is obtuse ((A o I o K)^[*] ∩ R(A o I) is acute)", Logic::Holds);
    c.conclusion_side = b.record(c, acute(d, kSlice, kSliceDual, d.cod), kSlice, kSliceDual);
    r.cond_iii = c.conclusion_side;
    r.conditions.push_back(std::move(c));
  }
  r.cond_iii_span = is_acute(d.cone(kSpanSlice), d.cod);
  r.equivalence_ok = r.cond_i == r.cond_ii && r.cond_ii == r.cond_iii;
  r.lemma_results = lemma_chain(d, r.commutes, r.invariance);
  r.cones = d.cones;

  r.matrices.emplace("A", inst.a());
  r.matrices.emplace("A_pinv", mp_inverse(inst.a()));
  r.matrices.emplace("A_ipinv", d.a_pinv.matrix());
  r.matrices.emplace("A_adjoint", iadjoint(d.a).matrix());
  r.matrices.emplace("A_o_I", d.a_i.matrix());
  r.matrices.emplace("gram", d.gram.matrix());
  r.matrices.emplace("gram_pinv", mp_inverse(d.gram.matrix()));
  r.matrices.emplace("gram_ipinv", d.gram_pinv.matrix());
  r.matrices.emplace("projector", d.projector.matrix());

  r.notes.emplace_back("R(A o I) is closed automatically in finite dimensions; recorded as true without a test.");
  r.notes.emplace_back("The kernel summand in the dual-slice bound is read as N(A o I).");
  if (!r.commutes) {
    r.notes.emplace_back("caveat: M A != A N, so neither the lemmas nor the equivalence of (i)-(iii) are guaranteed.");
  } else if (!r.invariance) {
    r.notes.emplace_back(
        "caveat: K is not invariant under A^[+] o A, so the equivalence of (i)-(iii) is not guaranteed.");
  }
  if (r.obtuse_discrepancy()) {
    r.notes.emplace_back("obtuseness differs between the R(A o I) and span(C) forms of the definition.");
  }
  return r;
}

}  // namespace iip
