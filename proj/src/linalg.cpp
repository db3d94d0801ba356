#include "iip/linalg.hpp"

#include <stdexcept>

#include "iip/errors.hpp"

namespace iip {

namespace {

// Gauss-Jordan on `work`, mirroring every row operation on `shadow` (which
// may have zero columns). Only the first `limit` columns are eligible pivots.
std::vector<std::size_t> eliminate(RatMatrix& work, RatMatrix& shadow, std::size_t limit) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = work.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && work(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < work.cols(); ++j) {
        std::swap(work(p, j), work(r, j));
      }
      for (std::size_t j = 0; j < shadow.cols(); ++j) {
        std::swap(shadow(p, j), shadow(r, j));
      }
    }
    const Rat inv = 1 / work(r, c);
    for (std::size_t j = 0; j < work.cols(); ++j) {
      work(r, j) *= inv;
    }
    for (std::size_t j = 0; j < shadow.cols(); ++j) {
      shadow(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || work(i, c) == 0) {
        continue;
      }
      const Rat f = work(i, c);
      for (std::size_t j = 0; j < work.cols(); ++j) {
        work(i, j) -= f * work(r, j);
      }
      for (std::size_t j = 0; j < shadow.cols(); ++j) {
        shadow(i, j) -= f * shadow(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RatMatrix& a) {
  RrefResult out{a, {}, RatMatrix::identity(a.rows())};
  out.pivots = eliminate(out.reduced, out.transform, a.cols());
  return out;
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix work = a;
  RatMatrix none(a.rows(), 0);
  return eliminate(work, none, a.cols()).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
  RatMatrix work = a;
  RatMatrix none(a.rows(), 0);
  const auto pivots = eliminate(work, none, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    RatVector v(a.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -work(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) {
    return {};
  }
  RatMatrix work = RatMatrix::from_rows(vectors, dim);
  RatMatrix none(work.rows(), 0);
  const auto pivots = eliminate(work, none, dim);
  std::vector<RatVector> basis;
  basis.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    basis.push_back(primitive(work.row(r)));
  }
  return basis;
}

std::vector<RatVector> column_space_basis(const RatMatrix& a) { return canonical_basis(a.column_list(), a.rows()); }

std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) {
    std::vector<RatVector> all;
    for (std::size_t i = 0; i < dim; ++i) {
      all.push_back(unit_vector(dim, i));
    }
    return all;
  }
  return canonical_basis(kernel_basis(RatMatrix::from_rows(vectors, dim)), dim);
}

bool same_subspace(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim) {
  return canonical_basis(a, dim) == canonical_basis(b, dim);
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  if (is_zero(v)) {
    return true;
  }
  if (basis.empty()) {
    return false;
  }
  const std::size_t dim = v.size();
  std::vector<RatVector> extended = basis;
  extended.push_back(v);
  return rank(RatMatrix::from_rows(extended, dim)) == rank(RatMatrix::from_rows(basis, dim));
}

RatVector project_out(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) {
    return v;
  }
  // v - B^T (B B^T)^{-1} B v with B the (independent) basis rows.
  const RatMatrix b = RatMatrix::from_rows(basis, v.size());
  const RatMatrix gram = b * b.transpose();
  const RatVector coeffs = inverse(gram) * (b * v);
  return v - b.transpose() * coeffs;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("inverse: matrix is not square");
  }
  RatMatrix work = a;
  RatMatrix inv = RatMatrix::identity(a.rows());
  if (eliminate(work, inv, a.cols()).size() != a.rows()) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return inv;
}

RatMatrix mp_inverse(const RatMatrix& a) {
  const RrefResult rr = rref(a);
  const std::size_t r = rr.pivots.size();
  if (r == 0) {
    return RatMatrix::zero(a.cols(), a.rows());
  }
  RatMatrix f(a.rows(), r);
  RatMatrix g(r, a.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      f(i, k) = a(i, rr.pivots[k]);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      g(k, j) = rr.reduced(k, j);
    }
  }
  const RatMatrix ft = f.transpose();
  const RatMatrix gt = g.transpose();
  return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

std::optional<Solution> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(a.rows()));
  }
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      aug(i, j) = a(i, j);
    }
    aug(i, a.cols()) = b[i];
  }
  RatMatrix none(a.rows(), 0);
  const auto pivots = eliminate(aug, none, a.cols());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
    if (aug(i, a.cols()) != 0) {
      return std::nullopt;
    }
  }
  Solution s{RatVector(a.cols(), Rat(0)), kernel_basis(a)};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.particular[pivots[r]] = aug(r, a.cols());
  }
  return s;
}

}  // namespace iip
