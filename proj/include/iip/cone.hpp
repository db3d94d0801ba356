#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iip/indefinite.hpp"
#include "iip/rational.hpp"

namespace iip {

// Finitely generated cone in R^n held in both representations:
//
//   K = span(lineality) + cone(rays)
//     = {x : <e, x> = 0 for e in equalities, <f, x> >= 0 for f in facets}
//
// Both sides are canonical: lineality and equalities are primitive RREF bases,
// rays are the extreme rays projected off the lineality space, facets are the
// facet normals projected onto span K; rays and facets are primitive integer
// vectors sorted lexicographically. Equal sets therefore have equal members,
// though the library decides set equality by mutual inclusion.
class PolyCone {
 public:
  // V -> H by double description on the dual. Zero generators are dropped.
  // Throws DimensionError for dim == 0 or a generator of the wrong length.
  static PolyCone from_generators(std::size_t dim, const std::vector<RatVector>& generators);
  // H -> V by double description.
  static PolyCone from_constraints(std::size_t dim, const std::vector<RatVector>& inequalities,
                                   const std::vector<RatVector>& equalities = {});
  static PolyCone orthant(std::size_t dim);
  static PolyCone zero(std::size_t dim);
  static PolyCone full(std::size_t dim);
  // The subspace span(basis) as a cone (lineality only).
  static PolyCone span(std::size_t dim, const std::vector<RatVector>& basis);

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<RatVector>& rays() const noexcept { return rays_; }
  const std::vector<RatVector>& lineality() const noexcept { return lineality_; }
  const std::vector<RatVector>& facets() const noexcept { return facets_; }
  const std::vector<RatVector>& equalities() const noexcept { return equalities_; }

  // Rays followed by +l and -l for every lineality basis vector l.
  std::vector<RatVector> generators() const;
  // Facets followed by +e and -e for every equality e.
  std::vector<RatVector> inequalities() const;
  std::vector<RatVector> span_basis() const;
  std::size_t dimension() const { return span_basis().size(); }

  bool contains(const RatVector& x) const;
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }

  friend bool operator==(const PolyCone&, const PolyCone&) = default;
  friend PolyCone dual_euclidean(const PolyCone& k);

 private:
  PolyCone() = default;
  static PolyCone finish(std::size_t dim, std::vector<RatVector> ray_candidates, std::vector<RatVector> lineality,
                         std::vector<RatVector> facet_candidates, std::vector<RatVector> equalities);

  std::size_t dim_ = 0;
  std::vector<RatVector> rays_;
  std::vector<RatVector> lineality_;
  std::vector<RatVector> facets_;
  std::vector<RatVector> equalities_;
};

// Generator of `inner` outside `outer`, if any.
std::optional<RatVector> inclusion_witness(const PolyCone& outer, const PolyCone& inner);
bool includes(const PolyCone& outer, const PolyCone& inner);
bool cone_equal(const PolyCone& a, const PolyCone& b);

// K* = {y : <y, x> >= 0 for all x in K}; a representation swap.
PolyCone dual_euclidean(const PolyCone& k);
// K^[*] = {y : [y, x] >= 0 for all x in K} = W K*.
PolyCone dual_indefinite(const PolyCone& k, const IndefiniteSpace& space);
// {T x : x in K}.
PolyCone image_cone(const RatMatrix& t, const PolyCone& k);
PolyCone intersect(const PolyCone& a, const PolyCone& b);
PolyCone sum_with_subspace(const PolyCone& k, const std::vector<RatVector>& basis);
PolyCone span_cone(std::size_t dim, const std::vector<RatVector>& basis);

// [x, y] >= 0 for every pair of generators (x == y included). Sufficient for
// the whole cone by bilinearity over nonnegative combinations.
bool is_acute(const PolyCone& k, const IndefiniteSpace& space);
// K is a subset of K^[*].
bool is_acute_novikoff(const PolyCone& k, const IndefiniteSpace& space);

struct ObtusenessReport {
  bool obtuse_range = false;   // (A o I o K)^[*] intersect R(A o I) is acute
  bool obtuse_span = false;    // (A o I o K)^[*] intersect span(A o I o K) is acute
  bool discrepancy() const { return obtuse_range != obtuse_span; }
};

ObtusenessReport obtuseness(const IMatrix& a, const PolyCone& k);
// The range form, which is what the cone-invariance theorem uses.
bool is_obtuse_image(const IMatrix& a, const PolyCone& k);

std::string to_string(const PolyCone& k);

}  // namespace iip
