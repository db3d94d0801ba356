#include "iip/generator.hpp"

#include <limits>
#include <stdexcept>

#include "iip/batch.hpp"
#include "iip/errors.hpp"
#include "iip/linalg.hpp"

namespace iip {

long Rng::uniform(long lo, long hi) {
  if (lo > hi) {
    throw std::invalid_argument("Rng::uniform: empty range");
  }
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return lo + static_cast<long>(x % span);
}

const char* to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Identity:
      return "identity";
    case WeightKind::SignatureDiagonal:
      return "signature_diagonal";
    case WeightKind::CayleyConjugated:
      return "cayley_conjugated";
    case WeightKind::Mixed:
      return "mixed";
  }
  return "?";
}

const char* to_string(ConeKind kind) {
  return kind == ConeKind::Orthant ? "orthant" : "random_generators";
}

std::optional<WeightKind> parse_weight_kind(const std::string& text) {
  for (auto k : {WeightKind::Identity, WeightKind::SignatureDiagonal, WeightKind::CayleyConjugated, WeightKind::Mixed}) {
    if (text == to_string(k)) {
      return k;
    }
  }
  return std::nullopt;
}

std::optional<ConeKind> parse_cone_kind(const std::string& text) {
  for (auto k : {ConeKind::Orthant, ConeKind::RandomGenerators}) {
    if (text == to_string(k)) {
      return k;
    }
  }
  return std::nullopt;
}

void GenConfig::validate() const {
  if (m_min == 0 || n_min == 0 || m_min > m_max || n_min > n_max) {
    throw std::invalid_argument("GenConfig: dimension ranges must be nonempty and start at 1 or more");
  }
  if (m_max > kMaxGeneratedDim || n_max > kMaxGeneratedDim) {
    throw std::invalid_argument("GenConfig: dimensions are capped at " + std::to_string(kMaxGeneratedDim));
  }
  if (entry_bound <= 0 || generator_count == 0 || rejection_attempts == 0) {
    throw std::invalid_argument("GenConfig: entry_bound, generator_count and rejection_attempts must be positive");
  }
}

RatMatrix cayley(const RatMatrix& skew) {
  const RatMatrix id = RatMatrix::identity(skew.rows());
  return (id - skew) * inverse(id + skew);
}

WeightSample gen_weight(Rng& rng, WeightKind kind, std::size_t dim) {
  if (kind == WeightKind::Mixed) {
    kind = rng.chance(1, 2) ? WeightKind::SignatureDiagonal : WeightKind::CayleyConjugated;
  }
  RatVector signature(dim, Rat(1));
  if (kind != WeightKind::Identity) {
    for (auto& s : signature) {
      s = rng.chance(1, 2) ? 1 : -1;
    }
  }
  RatMatrix rotation = RatMatrix::identity(dim);
  if (kind == WeightKind::CayleyConjugated) {
    RatMatrix skew(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        skew(i, j) = make_rat(rng.uniform(-2, 2), rng.uniform(1, 2));
        skew(j, i) = -skew(i, j);
      }
    }
    rotation = cayley(skew);
  }
  RatMatrix w = rotation * RatMatrix::diagonal(signature) * rotation.transpose();
  return WeightSample{Weight(std::move(w)), std::move(rotation), std::move(signature)};
}

RatMatrix gen_compatible_a(Rng& rng, const GenConfig& cfg, const WeightSample& m, const WeightSample& n) {
  const std::size_t rows = m.weight.dim();
  const std::size_t cols = n.weight.dim();
  const long b = cfg.entry_bound;
  RatMatrix a(rows, cols);
  if (!cfg.commuting) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        a(i, j) = rng.uniform(-b, b);
      }
    }
    return a;
  }

  RatMatrix core(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (m.signature[i] == n.signature[j] && rng.chance(2, 3)) {
        core(i, j) = rng.uniform(-b, b);
      }
    }
  }
  // Occasionally copy a multiple of a same-signature row, forcing rank loss
  // while keeping the sparsity pattern.
  if (rows > 1 && rng.chance(1, 4)) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rows) - 1));
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rows) - 1));
    if (i != k && m.signature[i] == m.signature[k]) {
      const Rat c = rng.uniform(-2, 2);
      for (std::size_t j = 0; j < cols; ++j) {
        core(i, j) = c * core(k, j);
      }
    }
  }
  a = m.rotation * core * n.rotation.transpose();
  if (m.weight.matrix() * a != a * n.weight.matrix()) {
    throw DefectError("gen_compatible_a: generated A does not satisfy M A = A N");
  }
  return a;
}

namespace {

bool invariant(const RatMatrix& t, const PolyCone& k) {
  for (const auto& g : k.generators()) {
    if (!k.contains(t * g)) {
      return false;
    }
  }
  return true;
}

std::vector<RatVector> random_generators(Rng& rng, const GenConfig& cfg, std::size_t n) {
  const long b = cfg.entry_bound;
  // Half of the cones lean positive so that pointed cones are common.
  const long lo = rng.chance(1, 2) ? -1 : -b;
  std::vector<RatVector> gens;
  for (std::size_t g = 0; g < cfg.generator_count; ++g) {
    RatVector v(n);
    for (auto& x : v) {
      x = rng.uniform(lo, b);
    }
    gens.push_back(std::move(v));
  }
  return gens;
}

std::vector<RatVector> base_generators(Rng& rng, const GenConfig& cfg, std::size_t n) {
  if (cfg.cone_kind == ConeKind::Orthant) {
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(unit_vector(n, i));
    }
    return gens;
  }
  return random_generators(rng, cfg, n);
}

PolyCone invariant_closure(std::size_t n, std::vector<RatVector> gens, const RatMatrix& projector) {
  const std::size_t count = gens.size();
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(projector * gens[i]);
  }
  PolyCone k = PolyCone::from_generators(n, gens);
  if (!invariant(projector, k)) {
    throw DefectError("gen_cone: closure cone{g, P g} is not invariant; P is not idempotent");
  }
  return k;
}

}  // namespace

PolyCone gen_cone(Rng& rng, const GenConfig& cfg, std::size_t n, const RatMatrix& projector) {
  if (!cfg.force_invariance) {
    return PolyCone::from_generators(n, base_generators(rng, cfg, n));
  }
  if (cfg.invariance_mode == InvarianceMode::Rejection) {
    std::vector<RatVector> gens;
    for (std::size_t attempt = 0; attempt < cfg.rejection_attempts; ++attempt) {
      gens = base_generators(rng, cfg, n);
      PolyCone k = PolyCone::from_generators(n, gens);
      if (invariant(projector, k)) {
        return k;
      }
    }
    return invariant_closure(n, std::move(gens), projector);
  }
  return invariant_closure(n, base_generators(rng, cfg, n), projector);
}

InstanceGenerator::InstanceGenerator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) { cfg_.validate(); }

Instance InstanceGenerator::next() {
  const auto m = static_cast<std::size_t>(rng_.uniform(static_cast<long>(cfg_.m_min), static_cast<long>(cfg_.m_max)));
  const auto n = static_cast<std::size_t>(rng_.uniform(static_cast<long>(cfg_.n_min), static_cast<long>(cfg_.n_max)));
  WeightSample mw = gen_weight(rng_, cfg_.weight_kind, m);
  WeightSample nw = gen_weight(rng_, cfg_.weight_kind, n);
  RatMatrix a = gen_compatible_a(rng_, cfg_, mw, nw);
  const IMatrix ia(a, IndefiniteSpace(nw.weight), IndefiniteSpace(mw.weight));
  const RatMatrix projector = compose(imp_inverse(ia), ia).action();
  PolyCone k = gen_cone(rng_, cfg_, n, projector);
  std::string label = "gen-s" + std::to_string(cfg_.seed) + "-" + std::to_string(produced_++);
  return Instance(std::move(label), std::move(mw.weight), std::move(nw.weight), std::move(a), std::move(k));
}

const std::vector<SearchPredicate>& search_predicates() {
  static const std::vector<SearchPredicate> predicates = {
      {"falsify-main", "M A = A N and A^[+] o A o K ⊆ K, yet conditions (i)-(iii) disagree",
       [](const TheoremReport& r) { return r.theorem_falsified(); },
       [](GenConfig& c) {
         c.commuting = true;
         c.force_invariance = true;
       }},
      {"theorem34-reverse-fails",
       "M A = A N, K not invariant, and D + N((A o I)^[*]) ⊄ (A o I o K)^[*]",
       [](const TheoremReport& r) {
         const CheckResult* c = r.find_lemma("dual_image_exact_under_invariance");
         return r.commutes && !r.invariance && c && !c->conclusion_side;
       },
       [](GenConfig& c) {
         c.commuting = true;
         c.force_invariance = false;
       }},
      {"noncommuting-split", "M A != A N, D acute, yet (A^[*] o A)^[+] o K^[*] ⊄ K",
       [](const TheoremReport& r) { return !r.commutes && r.cond_i && !r.cond_ii_strict; },
       [](GenConfig& c) {
         c.commuting = false;
         c.force_invariance = true;
       }},
      {"lemma-defect", "some lemma that M A = A N guarantees fails",
       [](const TheoremReport& r) { return r.lemma_defect(); },
       [](GenConfig& c) { c.commuting = true; }},
      {"conditions-disagree", "conditions (i)-(iii) disagree (hypotheses not required)",
       [](const TheoremReport& r) { return !r.equivalence_ok; }, [](GenConfig&) {}},
  };
  return predicates;
}

const SearchPredicate* find_predicate(const std::string& name) {
  for (const auto& p : search_predicates()) {
    if (p.name == name) {
      return &p;
    }
  }
  return nullptr;
}

std::vector<Found> search(const GenConfig& cfg, const SearchPredicate& predicate, std::size_t budget,
                          bool parallel) {
  if (budget == 0) {
    throw std::invalid_argument("search: budget must be positive");
  }
  InstanceGenerator gen(cfg);
  std::vector<Instance> instances;
  instances.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) {
    instances.push_back(gen.next());
  }
  std::vector<TheoremReport> reports = parallel ? verify_batch(instances) : verify_batch_serial(instances);
  std::vector<Found> found;
  for (std::size_t i = 0; i < budget; ++i) {
    if (predicate.test(reports[i])) {
      found.push_back(Found{i, std::move(instances[i]), std::move(reports[i])});
    }
  }
  return found;
}

}  // namespace iip
