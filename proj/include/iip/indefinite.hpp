#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "iip/linalg.hpp"
#include "iip/matrix.hpp"

namespace iip {

// Symmetric involutory matrix (W = W^T, W W = I) defining [x, y] = <x, W y>.
// Checked at construction; a Weight value always satisfies both.
class Weight {
 public:
  explicit Weight(RatMatrix matrix);
  static Weight identity(std::size_t n);

  const RatMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  RatMatrix matrix_;
};

class IndefiniteSpace {
 public:
  explicit IndefiniteSpace(Weight weight) : weight_(std::move(weight)) {}
  static IndefiniteSpace euclidean(std::size_t n) { return IndefiniteSpace(Weight::identity(n)); }
  // One-dimensional Euclidean space; the domain of a column vector inside a chain.
  static IndefiniteSpace scalar() { return euclidean(1); }

  std::size_t dim() const noexcept { return weight_.dim(); }
  const Weight& weight() const noexcept { return weight_; }
  const RatMatrix& w() const noexcept { return weight_.matrix(); }

  friend bool operator==(const IndefiniteSpace&, const IndefiniteSpace&) = default;

 private:
  Weight weight_;
};

// Spaces s_0, ..., s_k of a k-factor composite. Factor i maps s_{i+1} into
// s_i, and the product inserts the weight of every interior space s_1..s_{k-1}.
using SpaceChain = std::vector<IndefiniteSpace>;

// A linear map between two indefinite spaces; matrix is codomain.dim x domain.dim.
class IMatrix {
 public:
  IMatrix(RatMatrix matrix, IndefiniteSpace domain, IndefiniteSpace codomain);

  const RatMatrix& matrix() const noexcept { return matrix_; }
  const IndefiniteSpace& domain() const noexcept { return domain_; }
  const IndefiniteSpace& codomain() const noexcept { return codomain_; }

  // The plain matrix E with A o x == E x for x in the domain.
  RatMatrix action() const { return matrix_ * domain_.w(); }

  friend bool operator==(const IMatrix&, const IMatrix&) = default;

 private:
  RatMatrix matrix_;
  IndefiniteSpace domain_;
  IndefiniteSpace codomain_;
};

IMatrix identity_on(const IndefiniteSpace& space);

Rat ibracket(const RatVector& x, const RatVector& y, const IndefiniteSpace& space);

// Left fold F_0 W_1 F_1 W_2 ... F_{k-1} with W_i the weight of chain[i].
RatMatrix ichain(std::span<const RatMatrix> factors, const SpaceChain& chain);

// A o B, inserting the weight of the shared space.
IMatrix compose(const IMatrix& a, const IMatrix& b);
IMatrix compose(const IMatrix& a, const IMatrix& b, const IMatrix& c);
// A o x.
RatVector iapply(const IMatrix& a, const RatVector& x);

// A^[*] = N A^T M for A: (n, N) -> (m, M).
IMatrix iadjoint(const IMatrix& a);

// Results of the four o-Penrose equations for a candidate X:
// A o X o A = A, X o A o X = X, (A o X)^[*] = A o X, (X o A)^[*] = X o A.
std::array<bool, 4> penrose_equations(const IMatrix& a, const IMatrix& x);

// A^[+] = N A^+ M, certified against the four o-Penrose equations.
// Throws DefectError if the certificate fails.
IMatrix imp_inverse(const IMatrix& a);

// {x : A o x = 0} and {A o x}, reduced to the Euclidean kernel / column space
// of A N. Bases are canonical.
std::vector<RatVector> ikernel_basis(const IMatrix& a);
std::vector<RatVector> irange_basis(const IMatrix& a);

struct PseudoinverseIdentities {
  bool adjoint_absorbs = false;      // A^[*] = A^[*] o A o A^[+] = A^[+] o A o A^[*]
  bool via_gram = false;             // A^[+] = A^[*] o (A o A^[*])^[+] = (A^[*] o A)^[+] o A^[*]
  bool gram_factorization = false;   // A^[+] o (A^[+])^[*] = (A^[*] o A)^[+]
  bool identity_shift = false;       // (A o I)^[+] = I o A^[+]
  bool ranges_and_kernels = false;   // R(A o A^[+]) = R(A), R(A^[+] o A) = R(A^[*]),
                                     // N(A o A^[+]) = N(A^[*]), N(A^[+] o A) = N(A)
  bool all() const {
    return adjoint_absorbs && via_gram && gram_factorization && identity_shift && ranges_and_kernels;
  }
};

PseudoinverseIdentities check_pseudoinverse_identities(const IMatrix& a);

struct ISolution {
  RatVector particular;            // A^[+] o b
  std::vector<RatVector> kernel;   // basis of {x : A o x = 0}
};

// General solution of A o x = b; none iff b is outside the o-range of A.
std::optional<ISolution> isolve(const IMatrix& a, const RatVector& b);

// A o A^[+] (projector onto R(A)) and A^[+] o A (projector onto R(A^[*])).
IMatrix iprojector_range(const IMatrix& a);
IMatrix iprojector_rowspace(const IMatrix& a);

// I o A == A o I, i.e. M A == A N.
bool commutes(const IMatrix& a);

}  // namespace iip
