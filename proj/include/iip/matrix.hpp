#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "iip/rational.hpp"

namespace iip {

// Dense row-major matrix over Rat. Value type; every operation is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix diagonal(const RatVector& d);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);
  static RatMatrix column(const RatVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  std::vector<RatVector> row_list() const;
  std::vector<RatVector> column_list() const;

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rat& s);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(RatMatrix a, const Rat& s);
RatMatrix operator*(const Rat& s, RatMatrix a);
RatVector operator*(const RatMatrix& a, const RatVector& x);

std::string to_string(const RatMatrix& m);

}  // namespace iip
