#include "iip/indefinite.hpp"

#include "iip/errors.hpp"

namespace iip {

Weight::Weight(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() == 0) {
    throw WeightError("weight must be a nonempty square matrix");
  }
  if (!matrix_.is_symmetric()) {
    throw WeightError("weight is not symmetric");
  }
  if (matrix_ * matrix_ != RatMatrix::identity(matrix_.rows())) {
    throw WeightError("weight is not involutory (W*W != I)");
  }
}

Weight Weight::identity(std::size_t n) { return Weight(RatMatrix::identity(n)); }

IMatrix::IMatrix(RatMatrix matrix, IndefiniteSpace domain, IndefiniteSpace codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw DimensionError("IMatrix: " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                         " matrix does not map a " + std::to_string(domain_.dim()) + "-space into a " +
                         std::to_string(codomain_.dim()) + "-space");
  }
}

IMatrix identity_on(const IndefiniteSpace& space) {
  return IMatrix(RatMatrix::identity(space.dim()), space, space);
}

Rat ibracket(const RatVector& x, const RatVector& y, const IndefiniteSpace& space) {
  if (x.size() != space.dim() || y.size() != space.dim()) {
    throw DimensionError("ibracket: vectors must have length " + std::to_string(space.dim()));
  }
  return dot(x, space.w() * y);
}

RatMatrix ichain(std::span<const RatMatrix> factors, const SpaceChain& chain) {
  if (factors.empty()) {
    throw DimensionError("ichain: no factors");
  }
  if (chain.size() != factors.size() + 1) {
    throw DimensionError("ichain: chain must have one more space than factors");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].rows() != chain[i].dim() || factors[i].cols() != chain[i + 1].dim()) {
      throw DimensionError("ichain: factor " + std::to_string(i) + " does not map space " + std::to_string(i + 1) +
                           " into space " + std::to_string(i));
    }
  }
  RatMatrix acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = acc * chain[i].w() * factors[i];
  }
  return acc;
}

IMatrix compose(const IMatrix& a, const IMatrix& b) {
  if (a.domain() != b.codomain()) {
    throw DimensionError("compose: domain of the left factor differs from codomain of the right factor");
  }
  const std::array<RatMatrix, 2> f{a.matrix(), b.matrix()};
  return IMatrix(ichain(f, {a.codomain(), a.domain(), b.domain()}), b.domain(), a.codomain());
}

IMatrix compose(const IMatrix& a, const IMatrix& b, const IMatrix& c) { return compose(compose(a, b), c); }

RatVector iapply(const IMatrix& a, const RatVector& x) {
  if (x.size() != a.domain().dim()) {
    throw DimensionError("apply: vector length " + std::to_string(x.size()) + " vs domain dimension " +
                         std::to_string(a.domain().dim()));
  }
  const std::array<RatMatrix, 2> f{a.matrix(), RatMatrix::column(x)};
  return ichain(f, {a.codomain(), a.domain(), IndefiniteSpace::scalar()}).col(0);
}

IMatrix iadjoint(const IMatrix& a) {
  return IMatrix(a.domain().w() * a.matrix().transpose() * a.codomain().w(), a.codomain(), a.domain());
}

std::array<bool, 4> penrose_equations(const IMatrix& a, const IMatrix& x) {
  const IMatrix ax = compose(a, x);
  const IMatrix xa = compose(x, a);
  return {compose(ax, a) == a, compose(xa, x) == x, iadjoint(ax) == ax, iadjoint(xa) == xa};
}

IMatrix imp_inverse(const IMatrix& a) {
  IMatrix x(a.domain().w() * mp_inverse(a.matrix()) * a.codomain().w(), a.codomain(), a.domain());
  for (bool ok : penrose_equations(a, x)) {
    if (!ok) {
      throw DefectError("imp_inverse: N A^+ M fails an o-Penrose equation");
    }
  }
  return x;
}

std::vector<RatVector> ikernel_basis(const IMatrix& a) {
  return canonical_basis(kernel_basis(a.action()), a.domain().dim());
}

std::vector<RatVector> irange_basis(const IMatrix& a) { return column_space_basis(a.action()); }

PseudoinverseIdentities check_pseudoinverse_identities(const IMatrix& a) {
  PseudoinverseIdentities out;
  const IMatrix ad = iadjoint(a);
  const IMatrix ap = imp_inverse(a);
  const IMatrix gram = compose(ad, a);
  const IMatrix cogram = compose(a, ad);
  const IMatrix gram_p = imp_inverse(gram);

  out.adjoint_absorbs = compose(ad, a, ap) == ad && compose(ap, a, ad) == ad;
  out.via_gram = compose(ad, imp_inverse(cogram)) == ap && compose(gram_p, ad) == ap;
  out.gram_factorization = compose(ap, iadjoint(ap)) == gram_p;

  const IndefiniteSpace& dom = a.domain();
  out.identity_shift = imp_inverse(compose(a, identity_on(dom))) == compose(identity_on(dom), ap);

  const IMatrix a_ap = compose(a, ap);
  const IMatrix ap_a = compose(ap, a);
  const std::size_t m = a.codomain().dim();
  const std::size_t n = dom.dim();
  out.ranges_and_kernels = same_subspace(irange_basis(a_ap), irange_basis(a), m) &&
                           same_subspace(irange_basis(ap_a), irange_basis(ad), n) &&
                           same_subspace(ikernel_basis(a_ap), ikernel_basis(ad), m) &&
                           same_subspace(ikernel_basis(ap_a), ikernel_basis(a), n);
  return out;
}

std::optional<ISolution> isolve(const IMatrix& a, const RatVector& b) {
  if (b.size() != a.codomain().dim()) {
    throw DimensionError("isolve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(a.codomain().dim()));
  }
  if (!solve(a.action(), b)) {
    return std::nullopt;
  }
  ISolution s{iapply(imp_inverse(a), b), ikernel_basis(a)};
  if (iapply(a, s.particular) != b) {
    throw DefectError("isolve: A o (A^[+] o b) != b for consistent b");
  }
  return s;
}

IMatrix iprojector_range(const IMatrix& a) { return compose(a, imp_inverse(a)); }

IMatrix iprojector_rowspace(const IMatrix& a) { return compose(imp_inverse(a), a); }

bool commutes(const IMatrix& a) { return a.codomain().w() * a.matrix() == a.matrix() * a.domain().w(); }

}  // namespace iip
