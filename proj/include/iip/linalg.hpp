#pragma once

#include <optional>
#include <vector>

#include "iip/matrix.hpp"

namespace iip {

struct RrefResult {
  RatMatrix reduced;                 // reduced row echelon form R
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row, strictly increasing
  RatMatrix transform;               // invertible E with E * A == R
};

RrefResult rref(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);

// Basis of {x : A x = 0}, one vector per free column with that entry set to 1.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

// Canonical basis of span(vectors): the nonzero rows of the RREF of the stacked
// vectors, each scaled to a primitive integer vector. Two spanning sets of the
// same subspace give identical output.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim);
std::vector<RatVector> column_space_basis(const RatMatrix& a);
std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& vectors, std::size_t dim);
bool same_subspace(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim);
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

// Euclidean orthogonal projection of v onto span(basis)^perp.
RatVector project_out(const std::vector<RatVector>& basis, const RatVector& v);

// Throws DimensionError when a is not square, std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);

// Euclidean Moore-Penrose inverse via the full-rank factorization A = F G
// (F: pivot columns of A, G: nonzero rows of rref(A)):
//   A^+ = G^T (G G^T)^{-1} (F^T F)^{-1} F^T.
RatMatrix mp_inverse(const RatMatrix& a);

struct Solution {
  RatVector particular;
  std::vector<RatVector> kernel;
};

// None iff b is not in the column space of A. Throws DimensionError when
// b.size() != A.rows().
std::optional<Solution> solve(const RatMatrix& a, const RatVector& b);

}  // namespace iip
