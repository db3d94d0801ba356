#include <doctest.h>

#include <set>

#include "iip/batch.hpp"
#include "iip/errors.hpp"
#include "iip/fixtures.hpp"
#include "iip/json_io.hpp"
#include "support.hpp"

using namespace support;

TEST_SUITE("generator") {

TEST_CASE("bounded draws stay in range and hit both ends") {
  Rng rng(1);
  std::set<long> seen;
  for (int i = 0; i < 2000; ++i) {
    const long x = rng.uniform(-3, 3);
    REQUIRE(x >= -3);
    REQUIRE(x <= 3);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(rng.uniform(5, 5) == 5);
  CHECK_THROWS(rng.uniform(2, 1));
}

TEST_CASE("the engine is the standard 64-bit Mersenne twister") {
  // Reference value fixed by the C++ standard for default-seeded mt19937_64.
  Rng rng(5489);
  for (int i = 0; i < 9999; ++i) {
    rng.next();
  }
  CHECK(rng.next() == 9981545732273789042ULL);
}

TEST_CASE("Cayley transform") {
  const RatMatrix s = mat(2, {{0, 1}, {-1, 0}});
  const RatMatrix q = cayley(s);
  // (I - S)(I + S)^{-1} multiplied out by hand.
  CHECK(q == mat(5, {{3, -4}, {4, 3}}));
  CHECK(q * q.transpose() == RatMatrix::identity(2));
  const RatMatrix n = q * RatMatrix::diagonal(vec({1, -1})) * q.transpose();
  CHECK(n.is_symmetric());
  CHECK(n * n == RatMatrix::identity(2));
  CHECK_NOTHROW(Weight{n});
}

TEST_CASE("weights of each kind") {
  Rng rng(9);
  CHECK(gen_weight(rng, WeightKind::Identity, 3).weight.matrix() == RatMatrix::identity(3));
  for (int i = 0; i < 50; ++i) {
    const auto d = gen_weight(rng, WeightKind::SignatureDiagonal, 4).weight.matrix();
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        REQUIRE((r == c ? d(r, c) * d(r, c) == 1 : d(r, c) == 0));
      }
    }
    const WeightSample w = gen_weight(rng, WeightKind::CayleyConjugated, 4);
    REQUIRE(w.rotation * w.rotation.transpose() == RatMatrix::identity(4));
    REQUIRE(w.weight.matrix() * w.weight.matrix() == RatMatrix::identity(4));
  }
  // The printed N of R1 is a signature-diagonal weight.
  CHECK_NOTHROW(Weight{mat(1, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})});
}

TEST_CASE("compatible matrices commute with the weights") {
  Rng rng(10);
  GenConfig cfg;
  WeightSample m{Weight(mat(1, {{1, 0}, {0, -1}})), RatMatrix::identity(2), vec({1, -1})};
  WeightSample n{Weight(mat(1, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})), RatMatrix::identity(3), vec({1, -1, -1})};
  for (int i = 0; i < 30; ++i) {
    const RatMatrix a = gen_compatible_a(rng, cfg, m, n);
    // The sign pattern [[*,0,0],[0,*,*]] that R1's A follows.
    REQUIRE(a(0, 1) == 0);
    REQUIRE(a(0, 2) == 0);
    REQUIRE(a(1, 0) == 0);
  }
  for (int i = 0; i < 100; ++i) {
    WeightSample mw = gen_weight(rng, WeightKind::CayleyConjugated, random_dim(rng, 1, 5));
    WeightSample nw = gen_weight(rng, WeightKind::Mixed, random_dim(rng, 1, 5));
    const RatMatrix a = gen_compatible_a(rng, cfg, mw, nw);
    REQUIRE(mw.weight.matrix() * a - a * nw.weight.matrix() == RatMatrix::zero(a.rows(), a.cols()));
  }
}

TEST_CASE("forced invariance") {
  Rng rng(12);
  GenConfig cfg;
  cfg.force_invariance = true;
  cfg.cone_kind = ConeKind::Orthant;
  const Instance r1 = fixture("R1");
  const IMatrix a = r1.as_imatrix();
  const RatMatrix p = compose(imp_inverse(a), a).action();
  const PolyCone k = gen_cone(rng, cfg, 3, p);
  CHECK(includes(k, PolyCone::orthant(3)));
  CHECK(includes(k, image_cone(p, k)));

  cfg.invariance_mode = InvarianceMode::Rejection;
  cfg.cone_kind = ConeKind::RandomGenerators;
  for (int i = 0; i < 20; ++i) {
    REQUIRE(includes(k, image_cone(p, k)));
    const PolyCone kr = gen_cone(rng, cfg, 3, p);
    REQUIRE(includes(kr, image_cone(p, kr)));
  }
}

TEST_CASE("generated streams") {
  GenConfig cfg;
  cfg.seed = 77;
  cfg.force_invariance = true;
  InstanceGenerator a(cfg);
  InstanceGenerator b(cfg);
  cfg.seed = 78;
  InstanceGenerator c(cfg);
  bool differs = false;
  for (int i = 0; i < 40; ++i) {
    const Instance x = a.next();
    const Instance y = b.next();
    const Instance z = c.next();
    REQUIRE(instance_to_json(x) == instance_to_json(y));
    differs = differs || x.a() != z.a() || x.m() != z.m();
    REQUIRE(commutes(x.as_imatrix()));
    const IMatrix p = compose(imp_inverse(x.as_imatrix()), x.as_imatrix());
    REQUIRE(compose(p, p) == p);
    REQUIRE(check_hypotheses(x).second);
  }
  CHECK(differs);
  CHECK(a.produced() == 40);
}

TEST_CASE("configs are validated") {
  GenConfig cfg;
  cfg.n_max = 13;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = GenConfig{};
  cfg.m_min = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = GenConfig{};
  cfg.entry_bound = 0;
  CHECK_THROWS_AS(InstanceGenerator{cfg}, std::invalid_argument);
}

TEST_CASE("serial and parallel batches agree") {
  GenConfig cfg;
  cfg.seed = 5;
  InstanceGenerator gen(cfg);
  std::vector<Instance> batch;
  for (int i = 0; i < 64; ++i) {
    batch.push_back(gen.next());
  }
  const auto par = verify_batch(batch);
  const auto ser = verify_batch_serial(batch);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    REQUIRE(report_to_json(par[i]) == report_to_json(ser[i]));
  }
}

TEST_CASE("search predicates") {
  CHECK(find_predicate("nope") == nullptr);
  for (const char* name : {"falsify-main", "theorem34-reverse-fails", "noncommuting-split", "lemma-defect",
                           "conditions-disagree"}) {
    CHECK(find_predicate(name) != nullptr);
  }
  const SearchPredicate& reverse = *find_predicate("theorem34-reverse-fails");
  const SearchPredicate& split = *find_predicate("noncommuting-split");
  CHECK(reverse.test(verify_main(fixture("R1"))));
  CHECK(split.test(verify_main(fixture("R3"))));
  CHECK_FALSE(find_predicate("falsify-main")->test(verify_main(fixture("R2"))));

  GenConfig cfg;
  cfg.seed = 7;
  reverse.defaults(cfg);
  CHECK_THROWS_AS(search(cfg, reverse, 0), std::invalid_argument);
  const auto found = search(cfg, reverse, 200);
  CHECK_FALSE(found.empty());
  const auto again = search(cfg, reverse, 200, false);
  REQUIRE(found.size() == again.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i].index == again[i].index);
  }

  GenConfig split_cfg;
  split_cfg.seed = 7;
  split.defaults(split_cfg);
  CHECK_FALSE(search(split_cfg, split, 200).empty());
}

}
