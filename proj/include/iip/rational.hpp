#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace iip {

// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
// terms with a positive denominator; values built from raw parts must go
// through make_rat/parse_rat.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or
// zero denominator.
Rat parse_rat(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& value);
std::string to_string(const RatVector& v);

bool is_zero(const RatVector& v);
Rat dot(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rat& factor);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);

// Positive multiple of v with coprime integer entries. Zero stays zero.
RatVector primitive(const RatVector& v);

RatVector unit_vector(std::size_t dim, std::size_t index);

}  // namespace iip
