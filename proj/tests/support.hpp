#pragma once

#include <initializer_list>
#include <string>

#include "iip/cone.hpp"
#include "iip/generator.hpp"
#include "iip/indefinite.hpp"
#include "iip/linalg.hpp"
#include "iip/matrix.hpp"

namespace support {

using namespace iip;

inline RatMatrix mat(long den, std::initializer_list<std::initializer_list<long>> rows) {
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

inline RatVector vec(long den, std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) {
    v.push_back(make_rat(x, den));
  }
  return v;
}

inline RatVector vec(std::initializer_list<long> xs) { return vec(1, xs); }

// Entries p/q with p in [-bound, bound] and q in {1,2,3,4}; about a third zero
// so that rank deficiency is common.
inline RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 9) {
  RatMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!rng.chance(1, 3)) {
        a(i, j) = make_rat(rng.uniform(-bound, bound), rng.uniform(1, 4));
      }
    }
  }
  return a;
}

inline RatVector random_vector(Rng& rng, std::size_t n, long bound = 5) {
  RatVector v(n);
  for (auto& x : v) {
    x = make_rat(rng.uniform(-bound, bound), rng.uniform(1, 3));
  }
  return v;
}

inline std::size_t random_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

inline PolyCone random_cone(Rng& rng, std::size_t n, std::size_t max_gens, long bound = 3) {
  const auto count = random_dim(rng, 1, max_gens);
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    RatVector g(n);
    for (auto& x : g) {
      x = rng.uniform(-bound, bound);
    }
    gens.push_back(std::move(g));
  }
  return PolyCone::from_generators(n, gens);
}

// Nonnegative integer combination of the generators.
inline RatVector random_member(Rng& rng, const PolyCone& k) {
  RatVector x(k.ambient_dim());
  for (const auto& g : k.generators()) {
    x = x + scaled(g, rng.uniform(0, 4));
  }
  return x;
}

}  // namespace support
