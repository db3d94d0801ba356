#include "iip/cone.hpp"

#include <algorithm>

#include "iip/double_description.hpp"
#include "iip/errors.hpp"
#include "iip/linalg.hpp"

namespace iip {

namespace {

void require_dim(std::size_t dim, const std::vector<RatVector>& vs, const char* what) {
  if (dim == 0) {
    throw DimensionError(std::string(what) + ": empty ambient dimension");
  }
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw DimensionError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                           " in ambient dimension " + std::to_string(dim));
    }
  }
}

std::size_t rank_of(const std::vector<RatVector>& rows, std::size_t dim) {
  return rows.empty() ? 0 : rank(RatMatrix::from_rows(rows, dim));
}

void sort_unique(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<RatVector> with_negatives(const std::vector<RatVector>& vs) {
  std::vector<RatVector> out = vs;
  for (const auto& v : vs) {
    out.push_back(-v);
  }
  return out;
}

}  // namespace

PolyCone PolyCone::finish(std::size_t dim, std::vector<RatVector> ray_candidates, std::vector<RatVector> lineality,
                          std::vector<RatVector> facet_candidates, std::vector<RatVector> equalities) {
  PolyCone k;
  k.dim_ = dim;
  k.lineality_ = canonical_basis(lineality, dim);
  k.equalities_ = canonical_basis(equalities, dim);

  std::vector<RatVector> rays;
  for (const auto& r : ray_candidates) {
    RatVector p = primitive(project_out(k.lineality_, r));
    if (!iip::is_zero(p)) {
      rays.push_back(std::move(p));
    }
  }
  sort_unique(rays);
  std::vector<RatVector> facets;
  for (const auto& f : facet_candidates) {
    RatVector p = primitive(project_out(k.equalities_, f));
    if (!iip::is_zero(p)) {
      facets.push_back(std::move(p));
    }
  }
  sort_unique(facets);

  // A ray is extreme iff its tight constraints leave a 1-dimensional face
  // modulo the lineality space.
  const std::size_t lin_dim = k.lineality_.size();
  for (const auto& r : rays) {
    std::vector<RatVector> tight = k.equalities_;
    for (const auto& f : facets) {
      if (dot(f, r) == 0) {
        tight.push_back(f);
      }
    }
    if (rank_of(tight, dim) + lin_dim + 1 == dim) {
      k.rays_.push_back(r);
    }
  }
  // A facet normal is genuine iff the generators it vanishes on span a
  // hyperplane of span K.
  std::vector<RatVector> all_gens = k.lineality_;
  all_gens.insert(all_gens.end(), k.rays_.begin(), k.rays_.end());
  const std::size_t cone_dim = rank_of(all_gens, dim);
  for (const auto& f : facets) {
    std::vector<RatVector> on_face = k.lineality_;
    for (const auto& r : k.rays_) {
      if (dot(f, r) == 0) {
        on_face.push_back(r);
      }
    }
    if (rank_of(on_face, dim) + 1 == cone_dim) {
      k.facets_.push_back(f);
    }
  }
  return k;
}

PolyCone PolyCone::from_generators(std::size_t dim, const std::vector<RatVector>& generators) {
  require_dim(dim, generators, "from_generators");
  std::vector<RatVector> gens;
  for (const auto& g : generators) {
    if (!iip::is_zero(g)) {
      gens.push_back(primitive(g));
    }
  }
  sort_unique(gens);
  // Inequality normals of K are the generators of K* = {y : <g, y> >= 0}.
  const GeneratorForm dual = double_description(dim, gens);
  std::vector<RatVector> rows = dual.lineality;
  rows.insert(rows.end(), dual.rays.begin(), dual.rays.end());
  std::vector<RatVector> lineality = rows.empty() ? orthogonal_complement({}, dim)
                                                  : kernel_basis(RatMatrix::from_rows(rows, dim));
  return finish(dim, std::move(gens), std::move(lineality), dual.rays, dual.lineality);
}

PolyCone PolyCone::from_constraints(std::size_t dim, const std::vector<RatVector>& inequalities,
                                    const std::vector<RatVector>& equalities) {
  require_dim(dim, inequalities, "from_constraints");
  require_dim(dim, equalities, "from_constraints");
  const GeneratorForm primal = double_description(dim, inequalities, equalities);
  std::vector<RatVector> spanning = primal.lineality;
  spanning.insert(spanning.end(), primal.rays.begin(), primal.rays.end());
  return finish(dim, primal.rays, primal.lineality, inequalities, orthogonal_complement(spanning, dim));
}

PolyCone PolyCone::orthant(std::size_t dim) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    gens.push_back(unit_vector(dim, i));
  }
  return from_generators(dim, gens);
}

PolyCone PolyCone::zero(std::size_t dim) { return from_generators(dim, {}); }

PolyCone PolyCone::full(std::size_t dim) { return from_constraints(dim, {}); }

PolyCone PolyCone::span(std::size_t dim, const std::vector<RatVector>& basis) {
  return from_generators(dim, with_negatives(basis));
}

std::vector<RatVector> PolyCone::generators() const {
  std::vector<RatVector> out = rays_;
  out.insert(out.end(), lineality_.begin(), lineality_.end());
  for (const auto& l : lineality_) {
    out.push_back(-l);
  }
  return out;
}

std::vector<RatVector> PolyCone::inequalities() const {
  std::vector<RatVector> out = facets_;
  out.insert(out.end(), equalities_.begin(), equalities_.end());
  for (const auto& e : equalities_) {
    out.push_back(-e);
  }
  return out;
}

std::vector<RatVector> PolyCone::span_basis() const {
  std::vector<RatVector> all = lineality_;
  all.insert(all.end(), rays_.begin(), rays_.end());
  return canonical_basis(all, dim_);
}

bool PolyCone::contains(const RatVector& x) const {
  if (x.size() != dim_) {
    throw DimensionError("contains: vector of length " + std::to_string(x.size()) + " in ambient dimension " +
                         std::to_string(dim_));
  }
  for (const auto& e : equalities_) {
    if (dot(e, x) != 0) {
      return false;
    }
  }
  for (const auto& f : facets_) {
    if (dot(f, x) < 0) {
      return false;
    }
  }
  return true;
}

std::optional<RatVector> inclusion_witness(const PolyCone& outer, const PolyCone& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) {
    throw DimensionError("includes: ambient dimensions differ");
  }
  for (const auto& g : inner.generators()) {
    if (!outer.contains(g)) {
      return g;
    }
  }
  return std::nullopt;
}

bool includes(const PolyCone& outer, const PolyCone& inner) { return !inclusion_witness(outer, inner); }

bool cone_equal(const PolyCone& a, const PolyCone& b) { return includes(a, b) && includes(b, a); }

PolyCone dual_euclidean(const PolyCone& k) {
  PolyCone d = k;
  std::swap(d.rays_, d.facets_);
  std::swap(d.lineality_, d.equalities_);
  return d;
}

PolyCone dual_indefinite(const PolyCone& k, const IndefiniteSpace& space) {
  if (space.dim() != k.ambient_dim()) {
    throw DimensionError("dual_indefinite: space dimension differs from cone dimension");
  }
  return image_cone(space.w(), dual_euclidean(k));
}

PolyCone image_cone(const RatMatrix& t, const PolyCone& k) {
  if (t.cols() != k.ambient_dim()) {
    throw DimensionError("image_cone: map has " + std::to_string(t.cols()) + " columns, cone lives in dimension " +
                         std::to_string(k.ambient_dim()));
  }
  std::vector<RatVector> gens;
  for (const auto& g : k.generators()) {
    gens.push_back(t * g);
  }
  return PolyCone::from_generators(t.rows(), gens);
}

PolyCone intersect(const PolyCone& a, const PolyCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("intersect: ambient dimensions differ");
  }
  std::vector<RatVector> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<RatVector> eqs = a.equalities();
  eqs.insert(eqs.end(), b.equalities().begin(), b.equalities().end());
  return PolyCone::from_constraints(a.ambient_dim(), ineqs, eqs);
}

PolyCone sum_with_subspace(const PolyCone& k, const std::vector<RatVector>& basis) {
  std::vector<RatVector> gens = k.generators();
  for (const auto& b : with_negatives(basis)) {
    gens.push_back(b);
  }
  return PolyCone::from_generators(k.ambient_dim(), gens);
}

PolyCone span_cone(std::size_t dim, const std::vector<RatVector>& basis) { return PolyCone::span(dim, basis); }

bool is_acute(const PolyCone& k, const IndefiniteSpace& space) {
  if (space.dim() != k.ambient_dim()) {
    throw DimensionError("is_acute: space dimension differs from cone dimension");
  }
  const auto gens = k.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const RatVector wg = space.w() * gens[i];
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (dot(gens[j], wg) < 0) {
        return false;
      }
    }
  }
  return true;
}

bool is_acute_novikoff(const PolyCone& k, const IndefiniteSpace& space) {
  return includes(dual_indefinite(k, space), k);
}

ObtusenessReport obtuseness(const IMatrix& a, const PolyCone& k) {
  if (k.ambient_dim() != a.domain().dim()) {
    throw DimensionError("obtuseness: cone does not live in the domain of A");
  }
  const IMatrix a_i = compose(a, identity_on(a.domain()));
  const PolyCone c = image_cone(a_i.action(), k);
  const PolyCone c_dual = dual_indefinite(c, a.codomain());
  const std::size_t m = a.codomain().dim();
  ObtusenessReport out;
  out.obtuse_range = is_acute(intersect(c_dual, span_cone(m, irange_basis(a_i))), a.codomain());
  out.obtuse_span = is_acute(intersect(c_dual, span_cone(m, c.span_basis())), a.codomain());
  return out;
}

bool is_obtuse_image(const IMatrix& a, const PolyCone& k) { return obtuseness(a, k).obtuse_range; }

std::string to_string(const PolyCone& k) {
  std::string out = "cone{";
  bool first = true;
  for (const auto& r : k.rays()) {
    out += first ? "" : ", ";
    out += to_string(r);
    first = false;
  }
  for (const auto& l : k.lineality()) {
    out += first ? "" : ", ";
    out += "+-" + to_string(l);
    first = false;
  }
  return out + "} in R^" + std::to_string(k.ambient_dim());
}

}  // namespace iip
