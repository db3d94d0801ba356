#include "iip/matrix.hpp"

#include "iip/errors.hpp"

namespace iip {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    m(i, i) = d[i];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("from_rows: row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

RatMatrix RatMatrix::column(const RatVector& v) { return from_columns({v}, v.size()); }

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.push_back(row(r));
  }
  return out;
}

std::vector<RatVector> RatMatrix::column_list() const {
  std::vector<RatVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    out.push_back(col(c));
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool RatMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix add: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix sub: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= other.data_[i];
  }
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
  for (auto& x : data_) {
    x *= s;
  }
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RatMatrix out(a.rows(), b.cols());
  Rat t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        t = aik * b(k, j);
        out(i, j) += t;
      }
    }
  }
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix-vector product: " + std::to_string(a.cols()) + " columns vs vector of length " +
                         std::to_string(x.size()));
  }
  RatVector out(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) {
        out += ", ";
      }
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace iip
