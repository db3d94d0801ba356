#include "iip/double_description.hpp"

#include <algorithm>

#include "iip/errors.hpp"
#include "iip/linalg.hpp"

namespace iip {

namespace {

int sign(const Rat& x) { return sgn(x); }

void dedupe(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool adjacent(const RatVector& p, const RatVector& q, const std::vector<RatVector>& processed, std::size_t dim,
              std::size_t lineality_dim) {
  const long need = static_cast<long>(dim) - static_cast<long>(lineality_dim) - 2;
  if (need < 0) {
    return false;
  }
  std::vector<RatVector> tight;
  for (const auto& row : processed) {
    if (dot(row, p) == 0 && dot(row, q) == 0) {
      tight.push_back(row);
    }
  }
  if (static_cast<long>(tight.size()) < need) {
    return false;
  }
  if (need == 0) {
    return true;
  }
  return static_cast<long>(rank(RatMatrix::from_rows(tight, dim))) == need;
}

}  // namespace

GeneratorForm double_description(std::size_t dim, const std::vector<RatVector>& inequalities,
                                 const std::vector<RatVector>& equalities) {
  std::vector<RatVector> constraints;
  for (const auto& a : inequalities) {
    if (a.size() != dim) {
      throw DimensionError("double_description: inequality of length " + std::to_string(a.size()) + " in dimension " +
                           std::to_string(dim));
    }
    constraints.push_back(primitive(a));
  }
  for (const auto& e : equalities) {
    if (e.size() != dim) {
      throw DimensionError("double_description: equality of length " + std::to_string(e.size()) + " in dimension " +
                           std::to_string(dim));
    }
    constraints.push_back(primitive(e));
    constraints.push_back(-primitive(e));
  }

  GeneratorForm form;
  for (std::size_t i = 0; i < dim; ++i) {
    form.lineality.push_back(unit_vector(dim, i));
  }
  std::vector<RatVector> processed;

  for (const auto& a : constraints) {
    if (is_zero(a)) {
      continue;
    }
    auto lin_it = std::find_if(form.lineality.begin(), form.lineality.end(),
                               [&](const RatVector& l) { return dot(a, l) != 0; });
    if (lin_it != form.lineality.end()) {
      RatVector l0 = *lin_it;
      form.lineality.erase(lin_it);
      Rat s = dot(a, l0);
      if (s < 0) {
        l0 = -l0;
        s = -s;
      }
      for (auto& l : form.lineality) {
        l = primitive(l - scaled(l0, dot(a, l) / s));
      }
      for (auto& r : form.rays) {
        r = primitive(r - scaled(l0, dot(a, r) / s));
      }
      form.rays.push_back(primitive(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<RatVector> pos;
    std::vector<RatVector> neg;
    std::vector<RatVector> next;
    for (const auto& r : form.rays) {
      switch (sign(dot(a, r))) {
        case 1:
          pos.push_back(r);
          next.push_back(r);
          break;
        case 0:
          next.push_back(r);
          break;
        default:
          neg.push_back(r);
          break;
      }
    }
    for (const auto& p : pos) {
      const Rat ap = dot(a, p);
      for (const auto& q : neg) {
        if (!adjacent(p, q, processed, dim, form.lineality.size())) {
          continue;
        }
        next.push_back(primitive(scaled(q, ap) - scaled(p, dot(a, q))));
      }
    }
    dedupe(next);
    form.rays = std::move(next);
    processed.push_back(a);
  }
  return form;
}

}  // namespace iip
