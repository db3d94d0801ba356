#pragma once

#include <vector>

#include "iip/rational.hpp"

namespace iip {

// Generator form of {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equalities}:
// the cone equals span(lineality) + cone(rays), and every ray is extreme
// modulo the lineality space.
struct GeneratorForm {
  std::vector<RatVector> lineality;
  std::vector<RatVector> rays;
};

// Double description method (Motzkin et al.) with exact rational pivots. Each
// constraint is intersected in turn; while the current cone still has lineality
// not orthogonal to the constraint, one lineality direction is turned into a
// ray. Otherwise rays are split by sign and adjacent (+,-) pairs are combined,
// adjacency decided by the rank of their common tight constraints.
GeneratorForm double_description(std::size_t dim, const std::vector<RatVector>& inequalities,
                                 const std::vector<RatVector>& equalities = {});

}  // namespace iip
