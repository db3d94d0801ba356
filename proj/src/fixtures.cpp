#include "iip/fixtures.hpp"

#include <initializer_list>
#include <stdexcept>

#include "iip/linalg.hpp"

namespace iip {

namespace {

RatMatrix scaled_matrix(long den, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) {
    RatVector v;
    for (long x : r) {
      v.push_back(make_rat(x, den));
    }
    out.push_back(std::move(v));
  }
  return RatMatrix::from_rows(out, out.front().size());
}

RatVector scaled_vector(long den, std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) {
    v.push_back(make_rat(x, den));
  }
  return v;
}

std::string basis_string(const std::vector<RatVector>& basis) {
  std::string s = "span{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s += (i ? ", " : "") + to_string(basis[i]);
  }
  return s + "}";
}

class Checker {
 public:
  explicit Checker(std::string label) { result_.fixture = std::move(label); }

  void matrix(const std::string& q, const RatMatrix& expected, const RatMatrix& actual) {
    record(q, expected == actual, to_string(expected), to_string(actual));
  }
  void vector(const std::string& q, const RatVector& expected, const RatVector& actual) {
    record(q, expected == actual, to_string(expected), to_string(actual));
  }
  void scalar(const std::string& q, const Rat& expected, const Rat& actual) {
    record(q, expected == actual, to_string(expected), to_string(actual));
  }
  void flag(const std::string& q, bool expected, bool actual) {
    record(q, expected == actual, expected ? "true" : "false", actual ? "true" : "false");
  }
  void subspace(const std::string& q, std::size_t dim, const std::vector<RatVector>& expected,
                const std::vector<RatVector>& actual) {
    record(q, same_subspace(expected, actual, dim), basis_string(expected), basis_string(actual));
  }
  void cone(const std::string& q, const PolyCone& expected, const PolyCone& actual) {
    record(q, cone_equal(expected, actual), to_string(expected), to_string(actual));
  }

  FixtureCheck take() { return std::move(result_); }

 private:
  void record(const std::string& q, bool same, std::string expected, std::string actual) {
    ++result_.quantities;
    if (!same) {
      result_.mismatches.push_back(Mismatch{result_.fixture, q, std::move(expected), std::move(actual)});
    }
  }

  FixtureCheck result_;
};

// Shared handles on the objects every fixture prints.
struct Objects {
  IMatrix a;
  IMatrix a_i;
  IMatrix a_pinv;
  IMatrix d_map;  // (A^[+])^[*] o I
  IMatrix gram;
  IMatrix gram_pinv;
  TheoremReport report;

  explicit Objects(const Instance& inst)
      : a(inst.as_imatrix()),
        a_i(compose(a, identity_on(inst.domain()))),
        a_pinv(imp_inverse(a)),
        d_map(compose(iadjoint(a_pinv), identity_on(inst.domain()))),
        gram(compose(iadjoint(a), a)),
        gram_pinv(imp_inverse(gram)),
        report(verify_main(inst)) {}
};

void check_r1(Checker& c, const Instance& inst) {
  const Objects o(inst);
  const RatVector x = scaled_vector(1, {1, 2, 3});
  const RatVector px = iapply(compose(o.a_pinv, o.a), x);

  c.matrix("A^{\\dagger}", scaled_matrix(2, {{2, 0}, {0, -1}, {0, 1}}), mp_inverse(inst.a()));
  c.matrix("A^{[\\dagger]}", scaled_matrix(2, {{2, 0}, {0, -1}, {0, 1}}), o.a_pinv.matrix());
  c.matrix("A o I", scaled_matrix(1, {{1, 0, 0}, {0, 1, -1}}), o.a_i.matrix());
  c.cone("K^{[*]}", PolyCone::from_generators(3, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), o.report.cones.at("K_dual"));
  c.vector("A^{[\\dagger]} o A o (1,2,3)", scaled_vector(2, {2, -1, 1}), px);
  c.flag("A^{[\\dagger]} o A o (1,2,3) in K", false, inst.k().contains(px));
  c.subspace("N((A o I)^{[*]})", 2, {}, ikernel_basis(iadjoint(o.a_i)));

  const RatVector y1 = inst.n().matrix() * scaled_vector(1, {1, 2, 0});
  c.vector("y^{1} = N(1,2,0)", scaled_vector(1, {1, -2, 0}), y1);
  const RatVector u = iapply(o.d_map, y1);
  c.vector("u", scaled_vector(1, {1, 1}), u);
  const Rat pairing = ibracket(u, iapply(o.a_i, scaled_vector(1, {1, 4, 8})), inst.codomain());
  c.flag("[u, A o I o (1,4,8)] < 0", true, pairing < 0);

  const RatVector ay = iapply(o.a_i, scaled_vector(1, {2, 5, 8}));
  c.vector("y^{1} = A o I o (2,5,8)", scaled_vector(1, {2, 3}), ay);
  c.scalar("[y^{1}, z]", -1, ibracket(ay, u, inst.codomain()));

  c.subspace("N(A o I)", 3, {{0, 1, 1}}, ikernel_basis(o.a_i));
  c.matrix("A^{[*]} o A", scaled_matrix(1, {{1, 0, 0}, {0, -1, 1}, {0, 1, -1}}), o.gram.matrix());
  c.matrix("(A^{[*]} o A)^{\\dagger}", scaled_matrix(4, {{4, 0, 0}, {0, -1, 1}, {0, 1, -1}}),
           mp_inverse(o.gram.matrix()));
  const RatVector gx = iapply(o.gram_pinv, inst.n().matrix() * x);
  c.vector("(A^{[*]} o A)^{[\\dagger]} o N(1,2,3)", scaled_vector(4, {4, 1, -1}), gx);
  c.flag("(A^{[*]} o A)^{[\\dagger]} o N(1,2,3) in K", false, inst.k().contains(gx));
  c.flag("(A^{[*]} o A)^{[\\dagger]} o N(1,2,3) in K + N(A o I)", true,
         o.report.cones.at("sum_with_nullspace").contains(gx));

  c.flag("commutes", true, o.report.commutes);
  c.flag("invariance", false, o.report.invariance);
  c.flag("cond_ii", true, o.report.cond_ii);
  c.flag("cond_ii_strict", false, o.report.cond_ii_strict);
}

void check_r2(Checker& c, const Instance& inst) {
  const Objects o(inst);
  const RatMatrix pinv = scaled_matrix(4, {{1, 1}, {0, 0}, {1, 1}});
  c.matrix("A^{\\dagger}", pinv, mp_inverse(inst.a()));
  c.matrix("A^{[\\dagger]}", pinv, o.a_pinv.matrix());
  c.matrix("N A^{\\dagger} M", pinv, inst.n().matrix() * mp_inverse(inst.a()) * inst.m().matrix());
  c.cone("K^{[*]}", PolyCone::from_generators(3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), o.report.cones.at("K_dual"));
  c.matrix("A^{[\\dagger]} o A", scaled_matrix(2, {{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}),
           compose(o.a_pinv, o.a).action());
  c.matrix("(A^{[*]} o A)^{\\dagger}", scaled_matrix(16, {{2, 0, 2}, {0, 0, 0}, {2, 0, 2}}),
           mp_inverse(o.gram.matrix()));
  c.flag("commutes", true, o.report.commutes);
  c.flag("invariance", true, o.report.invariance);
  c.flag("(A^{[*]} o A)^{[\\dagger]} o K^{[*]} inside K", true, o.report.cond_ii_strict);
  c.flag("D acute", true, o.report.cond_i);
  c.flag("cond_ii", true, o.report.cond_ii);
  c.flag("C obtuse", true, o.report.cond_iii);
  c.flag("equivalence", true, o.report.equivalence_ok);
}

void check_r3(Checker& c, const Instance& inst) {
  const Objects o(inst);
  c.flag("commutes", false, o.report.commutes);
  c.matrix("A^{\\dagger}", scaled_matrix(2, {{0, 0}, {1, 1}}), mp_inverse(inst.a()));
  c.matrix("A^{[\\dagger]}", scaled_matrix(2, {{1, 1}, {0, 0}}), o.a_pinv.matrix());
  c.cone("K^{[*]}", PolyCone::from_constraints(2, {{0, 1}}), o.report.cones.at("K_dual"));
  c.flag("invariance", true, o.report.invariance);
  c.cone("D", PolyCone::from_generators(2, {{1, 1}}), o.report.cones.at("D"));
  c.flag("D acute", true, o.report.cond_i);
  c.matrix("(A^{[*]} o A)^{[\\dagger]}", scaled_matrix(4, {{0, 2}, {0, 0}}), o.gram_pinv.matrix());
  c.flag("(A^{[*]} o A)^{[\\dagger]} o K^{[*]} inside K", false, o.report.cond_ii_strict);
}

}  // namespace

Instance fixture(const std::string& label) {
  if (label == "R1") {
    return Instance("R1", Weight(scaled_matrix(1, {{1, 0}, {0, -1}})),
                    Weight(scaled_matrix(1, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})),
                    scaled_matrix(1, {{1, 0, 0}, {0, -1, 1}}), PolyCone::orthant(3));
  }
  if (label == "R2") {
    return Instance("R2", Weight(scaled_matrix(1, {{0, 1}, {1, 0}})),
                    Weight(scaled_matrix(1, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})),
                    scaled_matrix(1, {{1, 0, 1}, {1, 0, 1}}), PolyCone::orthant(3));
  }
  if (label == "R3") {
    const RatMatrix swap = scaled_matrix(1, {{0, 1}, {1, 0}});
    return Instance("R3", Weight(swap), Weight(swap), scaled_matrix(1, {{0, 1}, {0, 1}}),
                    PolyCone::from_generators(2, {{1, 0}}));
  }
  throw std::invalid_argument("unknown fixture '" + label + "'");
}

std::vector<Instance> fixtures() { return {fixture("R1"), fixture("R2"), fixture("R3")}; }

bool is_fixture_label(const std::string& label) { return label == "R1" || label == "R2" || label == "R3"; }

FixtureCheck compare_with_printed_values(const Instance& inst) {
  Checker c(inst.label());
  if (inst.label() == "R1") {
    check_r1(c, inst);
  } else if (inst.label() == "R2") {
    check_r2(c, inst);
  } else if (inst.label() == "R3") {
    check_r3(c, inst);
  } else {
    throw std::invalid_argument("no printed values for instance '" + inst.label() + "'");
  }
  return c.take();
}

}  // namespace iip
