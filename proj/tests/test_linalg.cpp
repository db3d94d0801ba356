#include <doctest.h>

#include "support.hpp"

using namespace support;

TEST_SUITE("linalg") {

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rat("6/4") == make_rat(3, 2));
  CHECK(parse_rat("-7") == -7);
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(make_rat(0, 5)) == "0");
  CHECK(to_string(make_rat(4, -2)) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK(primitive(vec(2, {2, -4, 6})) == vec({1, -2, 3}));
}

TEST_CASE("rref of identity, a fixture matrix and zero") {
  auto id = rref(RatMatrix::identity(3));
  CHECK(id.reduced == RatMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.transform == RatMatrix::identity(3));

  const RatMatrix a = mat(1, {{1, 0, 0}, {0, -1, 1}});
  auto r = rref(a);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == mat(1, {{1, 0, 0}, {0, 1, -1}}));
  CHECK(r.transform * a == r.reduced);

  auto z = rref(RatMatrix::zero(2, 3));
  CHECK(z.reduced == RatMatrix::zero(2, 3));
  CHECK(z.pivots.empty());
  CHECK(z.transform == RatMatrix::identity(2));
}

TEST_CASE("kernel bases") {
  auto k = kernel_basis(mat(1, {{1, 0, 0}, {0, 1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(same_subspace(k, {vec({0, 1, 1})}, 3));
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());
  auto line = kernel_basis(mat(1, {{1, 1}}));
  REQUIRE(line.size() == 1);
  CHECK(same_subspace(line, {vec({1, -1})}, 2));
}

TEST_CASE("Moore-Penrose inverse of the printed matrices") {
  CHECK(mp_inverse(mat(1, {{1, 0, 0}, {0, -1, 1}})) == mat(2, {{2, 0}, {0, -1}, {0, 1}}));
  CHECK(mp_inverse(mat(1, {{1, 0, 1}, {1, 0, 1}})) == mat(4, {{1, 1}, {0, 0}, {1, 1}}));
  CHECK(mp_inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));
  CHECK(mp_inverse(RatMatrix::zero(2, 3)) == RatMatrix::zero(3, 2));
}

TEST_CASE("solve") {
  auto s = solve(RatMatrix::identity(2), vec({3, 4}));
  REQUIRE(s);
  CHECK(s->particular == vec({3, 4}));
  CHECK(s->kernel.empty());

  const RatMatrix a = mat(1, {{1, 0, 0}, {0, 1, -1}});
  s = solve(a, vec({2, 3}));
  REQUIRE(s);
  CHECK(a * s->particular == vec({2, 3}));
  CHECK(s->particular == vec({2, 3, 0}));
  CHECK(same_subspace(s->kernel, {vec({0, 1, 1})}, 3));

  CHECK_FALSE(solve(mat(1, {{1}, {1}}), vec({1, 2})));
  CHECK_THROWS(solve(a, vec({1, 2, 3})));
}

TEST_CASE("inverse rejects singular matrices") {
  CHECK(inverse(mat(1, {{2, 1}, {1, 1}})) == mat(1, {{1, -1}, {-1, 2}}));
  CHECK_THROWS_AS(inverse(mat(1, {{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("property: the four Penrose equations, involution, rank symmetry, kernel orthogonality") {
  Rng rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const RatMatrix a = random_matrix(rng, random_dim(rng, 1, 8), random_dim(rng, 1, 8));
    const RatMatrix x = mp_inverse(a);
    CAPTURE(to_string(a));
    // Independent oracle: plain matrix products.
    REQUIRE(a * x * a == a);
    REQUIRE(x * a * x == x);
    REQUIRE((a * x).transpose() == a * x);
    REQUIRE((x * a).transpose() == x * a);
    REQUIRE(mp_inverse(x) == a);

    const auto r = rref(a);
    REQUIRE(rank(a) == r.pivots.size());
    REQUIRE(rank(a) == rank(a.transpose()));

    const auto ker = kernel_basis(a);
    REQUIRE(ker.size() == a.cols() - rank(a));
    for (const auto& v : ker) {
      REQUIRE(a * v == RatVector(a.rows()));
      for (std::size_t i = 0; i < a.rows(); ++i) {
        REQUIRE(dot(a.row(i), v) == 0);
      }
    }
  }
}

}
