#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "iip/cone.hpp"
#include "iip/verifier.hpp"

namespace iip {

// mt19937_64 with bounded draws by rejection sampling. Unlike the standard
// distributions this is bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  // True with probability num/den.
  bool chance(long num, long den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

enum class WeightKind { Identity, SignatureDiagonal, CayleyConjugated, Mixed };
enum class ConeKind { Orthant, RandomGenerators };
enum class InvarianceMode { Closure, Rejection };

const char* to_string(WeightKind kind);
const char* to_string(ConeKind kind);
std::optional<WeightKind> parse_weight_kind(const std::string& text);
std::optional<ConeKind> parse_cone_kind(const std::string& text);

inline constexpr std::size_t kMaxGeneratedDim = 12;

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t m_min = 1;
  std::size_t m_max = 4;
  std::size_t n_min = 1;
  std::size_t n_max = 4;
  WeightKind weight_kind = WeightKind::Mixed;
  ConeKind cone_kind = ConeKind::RandomGenerators;
  std::size_t generator_count = 4;
  long entry_bound = 2;
  bool commuting = true;
  bool force_invariance = false;
  InvarianceMode invariance_mode = InvarianceMode::Closure;
  std::size_t rejection_attempts = 40;

  // Throws std::invalid_argument on non-positive bounds, empty dimension
  // ranges or dimensions above kMaxGeneratedDim.
  void validate() const;
};

// A weight Q D Q^T together with its factors (Q = I for diagonal kinds).
struct WeightSample {
  Weight weight;
  RatMatrix rotation;
  RatVector signature;
};

// (I - S)(I + S)^{-1} for skew-symmetric S; exactly orthogonal.
RatMatrix cayley(const RatMatrix& skew);

WeightSample gen_weight(Rng& rng, WeightKind kind, std::size_t dim);

// M A == A N by construction: entries of the diagonal-frame matrix are drawn
// only where the signatures agree, then rotated by the weight frames. With
// cfg.commuting == false the matrix is unconstrained.
RatMatrix gen_compatible_a(Rng& rng, const GenConfig& cfg, const WeightSample& m, const WeightSample& n);

// Orthant or random generators. With cfg.force_invariance the result is
// invariant under the idempotent `projector` (the action of A^[+] o A).
PolyCone gen_cone(Rng& rng, const GenConfig& cfg, std::size_t n, const RatMatrix& projector);

// Seeded instance stream; the same config always yields the same sequence.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(GenConfig cfg);
  Instance next();
  const GenConfig& config() const noexcept { return cfg_; }
  std::size_t produced() const noexcept { return produced_; }

 private:
  GenConfig cfg_;
  Rng rng_;
  std::size_t produced_ = 0;
};

struct SearchPredicate {
  std::string name;
  std::string description;
  std::function<bool(const TheoremReport&)> test;
  std::function<void(GenConfig&)> defaults;
};

const std::vector<SearchPredicate>& search_predicates();
const SearchPredicate* find_predicate(const std::string& name);

struct Found {
  std::size_t index;
  Instance instance;
  TheoremReport report;
};

// Generates `budget` instances from cfg and keeps those matching the
// predicate, in stream order. Throws std::invalid_argument for budget == 0.
std::vector<Found> search(const GenConfig& cfg, const SearchPredicate& predicate, std::size_t budget,
                          bool parallel = true);

}  // namespace iip
