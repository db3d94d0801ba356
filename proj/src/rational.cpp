#include "iip/rational.hpp"

#include <stdexcept>

namespace iip {

Rat make_rat(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (c < '0' || c > '9') {
        return false;
      }
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') {
      s.remove_prefix(1);
    }
    return std::string(s);
  };

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || (!den.empty() && den.front() == '-')) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  }
  mpz_class p(strip_plus(num));
  mpz_class q(strip_plus(den));
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      out += ", ";
    }
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

RatVector scaled(const RatVector& v, const Rat& factor) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * factor;
  }
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector add: length mismatch");
  }
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector sub: length mismatch");
  }
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

RatVector operator-(const RatVector& a) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = -a[i];
  }
  return out;
}

RatVector primitive(const RatVector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    mpz_class scaled_num = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (num_gcd == 0) {
    return v;
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  return scaled(v, factor);
}

RatVector unit_vector(std::size_t dim, std::size_t index) {
  RatVector e(dim, Rat(0));
  e.at(index) = 1;
  return e;
}

}  // namespace iip
