#include <doctest.h>

#include "iip/double_description.hpp"
#include "iip/errors.hpp"
#include "iip/fixtures.hpp"
#include "support.hpp"

using namespace support;

namespace {

// Every generator satisfies every inequality of the other representation.
bool representations_agree(const PolyCone& k) {
  for (const auto& g : k.generators()) {
    for (const auto& h : k.inequalities()) {
      if (dot(h, g) < 0) {
        return false;
      }
    }
  }
  return true;
}

const IndefiniteSpace kMinkowski2(Weight(mat(1, {{1, 0}, {0, -1}})));
const IndefiniteSpace kSwap2(Weight(mat(1, {{0, 1}, {1, 0}})));

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("double description of the orthant and a wedge") {
  const GeneratorForm g = double_description(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(g.lineality.empty());
  CHECK(g.rays.size() == 3);
  const GeneratorForm h = double_description(2, {vec({1, 0})});
  CHECK(h.lineality.size() == 1);
  CHECK(h.rays.size() == 1);
  const GeneratorForm z = double_description(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})});
  CHECK(z.lineality.empty());
  CHECK(z.rays.empty());
}

TEST_CASE("cones from generators") {
  const PolyCone k = PolyCone::from_generators(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(k == PolyCone::orthant(3));
  CHECK(k.facets().size() == 3);

  const PolyCone redundant = PolyCone::from_generators(2, {vec({1, 0}), vec({1, 1}), vec({0, 1})});
  CHECK(redundant == PolyCone::from_generators(2, {vec({1, 0}), vec({0, 1})}));
  CHECK(redundant.rays().size() == 2);

  const PolyCone plane =
      PolyCone::from_generators(3, {vec({1, 1, 0}), vec({-1, -1, 0}), vec({0, 1, 1}), vec({0, -1, -1})});
  CHECK(plane.lineality().size() == 2);
  CHECK(plane.equalities().size() == 1);
  CHECK(plane.rays().empty());
  CHECK(representations_agree(plane));
  CHECK(plane.contains(vec({1, 1, 0})));
  CHECK(plane.contains(vec({-1, -1, 0})));

  CHECK_THROWS_AS(PolyCone::from_generators(0, {}), DimensionError);
  CHECK_THROWS_AS(PolyCone::from_generators(2, {vec({1, 0, 0})}), DimensionError);
}

TEST_CASE("Euclidean duals") {
  CHECK(cone_equal(dual_euclidean(PolyCone::orthant(3)), PolyCone::orthant(3)));
  const PolyCone ray = PolyCone::from_generators(2, {vec({1, 0})});
  CHECK(cone_equal(dual_euclidean(ray), PolyCone::from_constraints(2, {vec({1, 0})})));
  CHECK(dual_euclidean(PolyCone::full(2)).is_zero());
  CHECK(cone_equal(dual_euclidean(PolyCone::zero(2)), PolyCone::full(2)));
}

TEST_CASE("indefinite duals") {
  const IndefiniteSpace n(Weight(mat(1, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})));
  CHECK(cone_equal(dual_indefinite(PolyCone::orthant(3), n),
                   PolyCone::from_generators(3, {vec({1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})})));
  const PolyCone ray = PolyCone::from_generators(2, {vec({1, 0})});
  // {(y, x) : x >= 0, y real}: the second coordinate is the constrained one.
  CHECK(cone_equal(dual_indefinite(ray, kSwap2), PolyCone::from_constraints(2, {vec({0, 1})})));
  CHECK(cone_equal(dual_indefinite(ray, IndefiniteSpace::euclidean(2)), dual_euclidean(ray)));
}

TEST_CASE("images, intersections and sums with subspaces") {
  const Instance r1 = fixture("R1");
  const PolyCone c1 = image_cone(r1.a(), r1.k());
  CHECK(c1.contains(r1.a() * vec({2, 5, 8})));
  CHECK(r1.a() * vec({2, 5, 8}) == vec({2, 3}));
  CHECK(cone_equal(image_cone(RatMatrix::identity(3), PolyCone::orthant(3)), PolyCone::orthant(3)));

  const Instance r2 = fixture("R2");
  CHECK(cone_equal(image_cone(r2.a(), r2.k()), PolyCone::from_generators(2, {vec({1, 1})})));

  const PolyCone k = PolyCone::from_generators(3, {vec({1, 2, 0}), vec({0, 1, -1}), vec({1, 1, 1})});
  CHECK(cone_equal(intersect(k, k), k));
  CHECK(cone_equal(sum_with_subspace(PolyCone::orthant(2), {vec({0, 1})}), PolyCone::from_constraints(2, {vec({1, 0})})));
  CHECK(span_cone(3, {vec({1, 1, 0})}).lineality().size() == 1);

  // N((A o I)^[*]) = {0} on R1, so the range is all of R^2 and the range
  // slice of C^[*] is C^[*] itself.
  const IMatrix ai = compose(r1.as_imatrix(), identity_on(r1.domain()));
  CHECK(ikernel_basis(iadjoint(ai)).empty());
  const PolyCone cdual = dual_indefinite(c1, r1.codomain());
  CHECK(cone_equal(intersect(cdual, span_cone(2, irange_basis(ai))), cdual));
}

TEST_CASE("membership and inclusion") {
  CHECK_FALSE(PolyCone::orthant(3).contains(vec(2, {2, -1, 1})));
  CHECK_FALSE(PolyCone::orthant(3).contains(vec(4, {4, 1, -1})));
  const PolyCone k = PolyCone::from_generators(2, {vec({1, 2}), vec({2, -1})});
  CHECK(includes(k, k));
  CHECK(includes(PolyCone::full(2), k));
  CHECK_FALSE(includes(k, PolyCone::full(2)));
  auto w = inclusion_witness(k, PolyCone::orthant(2));
  REQUIRE(w);
  CHECK_FALSE(k.contains(*w));
  CHECK_THROWS_AS(k.contains(vec({1, 2, 3})), DimensionError);
}

TEST_CASE("acuteness, pairwise and by inclusion") {
  const PolyCone diag = PolyCone::from_generators(2, {vec({1, 1})});
  CHECK(is_acute(diag, kMinkowski2));
  CHECK(is_acute(diag, kSwap2));
  CHECK_FALSE(is_acute(PolyCone::orthant(2), kMinkowski2));
  CHECK(is_acute(PolyCone::orthant(4), IndefiniteSpace::euclidean(4)));
  const PolyCone line = span_cone(2, {vec({1, 1})});
  CHECK(is_acute(line, kMinkowski2));
  CHECK_FALSE(is_acute(span_cone(2, {vec({1, 0})}), kMinkowski2));
  for (const auto& inst : fixtures()) {
    const TheoremReport r = verify_main(inst);
    const PolyCone& d = r.cones.at("D");
    CHECK(is_acute(d, inst.codomain()) == is_acute_novikoff(d, inst.codomain()));
  }
}

TEST_CASE("obtuse images") {
  const Instance r2 = fixture("R2");
  CHECK(is_obtuse_image(r2.as_imatrix(), r2.k()));
  // On R1, C = {(x, y) : x >= 0} and C^[*] = cone{(1, 0)}, which is acute.
  const Instance r1 = fixture("R1");
  CHECK(is_obtuse_image(r1.as_imatrix(), r1.k()));
  const IMatrix id(RatMatrix::identity(3), IndefiniteSpace::euclidean(3), IndefiniteSpace::euclidean(3));
  CHECK(is_obtuse_image(id, PolyCone::orthant(3)));
}

TEST_CASE("property: involutions, representation consistency, acuteness tests agree, sampling") {
  Rng rng(31337);
  int acute_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = random_dim(rng, 1, 5);
    const PolyCone k = random_cone(rng, n, 8);
    const IndefiniteSpace w(gen_weight(rng, WeightKind::Mixed, n).weight);
    REQUIRE(representations_agree(k));
    REQUIRE(cone_equal(dual_euclidean(dual_euclidean(k)), k));
    REQUIRE(dual_euclidean(dual_euclidean(k)) == k);
    const PolyCone kd = dual_indefinite(k, w);
    REQUIRE(representations_agree(kd));
    REQUIRE(cone_equal(dual_indefinite(kd, w), k));
    REQUIRE(cone_equal(PolyCone::from_constraints(n, k.inequalities()), k));

    const bool acute = is_acute(k, w);
    REQUIRE(acute == is_acute_novikoff(k, w));
    if (acute) {
      ++acute_seen;
      for (int s = 0; s < 1000; ++s) {
        REQUIRE(ibracket(random_member(rng, k), random_member(rng, k), w) >= 0);
      }
    }
  }
  CHECK(acute_seen > 10);
}

}
