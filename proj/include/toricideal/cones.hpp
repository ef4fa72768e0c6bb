#pragma once

/**
 * @file cones.hpp
 * @brief Rational polyhedral cones: duality, extreme rays, interiors,
 * triangulation, fundamental parallelotopes and Hilbert bases.
 *
 * A RationalCone is a value: its generators are fixed at construction and
 * the H-representation (primitive inward normals) is computed on first use
 * by double description and shared between copies.
 */

#include "toricideal/double_description.hpp"
#include "toricideal/errors.hpp"
#include "toricideal/linalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricideal {

class RationalCone {
 public:
  RationalCone() : RationalCone(0, {}) {}

  /// Cone generated by `generators` in Z^rank. Zero vectors are dropped,
  /// the rest made primitive and deduplicated.
  RationalCone(std::size_t rank, std::vector<LatticeVector> generators)
      : rank_(rank), cache_(std::make_shared<Cache>()) {
    std::set<LatticeVector> seen;
    for (auto& g : generators) {
      if (g.rank() != rank) {
        throw std::invalid_argument("RationalCone: generator " + g.str() + " has wrong rank");
      }
      if (g.is_zero()) continue;
      LatticeVector p = primitive(g);
      if (seen.insert(p).second) generators_.push_back(std::move(p));
    }
  }

  /// The positive orthant of Z^rank.
  static RationalCone orthant(std::size_t rank) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < rank; ++i) {
      LatticeVector e(rank);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    return RationalCone(rank, std::move(gens));
  }

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

  /// Primitive normals n_j with cone = {x : <x, n_j> >= 0}. Irredundant when
  /// the cone is full-dimensional; otherwise contains +-pairs spanning the
  /// orthogonal complement. Sorted lexicographically.
  const std::vector<LatticeVector>& halfspaces() const {
    ensure();
    return cache_->halfspaces;
  }

  std::size_t dimension() const { return vector_rank(generators_, rank_); }
  bool is_full_dimensional() const { return dimension() == rank_; }

  /// c intersected with -c is {0}.
  bool is_strongly_convex() const {
    ensure();
    return cache_->rays.has_value();
  }

  /// Primitive generators of the extremal rays, lexicographically sorted.
  const std::vector<LatticeVector>& rays() const {
    ensure();
    if (!cache_->rays) throw PreconditionError("rays: cone is not strongly convex");
    return *cache_->rays;
  }

  template <class V>
  bool contains(const V& x) const {
    check_rank(x.rank());
    for (const auto& n : halfspaces())
      if (pairing(x, n) < 0) return false;
    return true;
  }

  /// Strict inequality on every facet. Requires a full-dimensional cone.
  template <class V>
  bool interior_contains(const V& x) const {
    check_rank(x.rank());
    if (!is_full_dimensional()) {
      throw PreconditionError("interior_contains: cone is not full-dimensional");
    }
    for (const auto& n : halfspaces())
      if (pairing(x, n) <= 0) return false;
    return true;
  }

  /// Same set of points (compared through extreme rays and halfspaces).
  friend bool same_cone(const RationalCone& a, const RationalCone& b) {
    return a.rank_ == b.rank_ && a.halfspaces() == b.halfspaces() &&
           a.is_strongly_convex() == b.is_strongly_convex() &&
           (!a.is_strongly_convex() || a.rays() == b.rays());
  }

  std::string str() const {
    std::string s = "Cone(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) s += ",";
      s += generators_[i].str();
    }
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    bool prefilled = false;
    std::vector<LatticeVector> halfspaces;
    std::optional<std::vector<LatticeVector>> rays;
  };

  friend RationalCone dual_cone(const RationalCone& c);

  void check_rank(std::size_t r) const {
    if (r != rank_) throw std::invalid_argument("cone: point rank mismatch");
  }

  void ensure() const {
    std::call_once(cache_->once, [this] {
      if (!cache_->prefilled) compute();
    });
  }

  void compute() const {
    ConeGenerators dual = cone_from_inequalities(generators_, rank_);
    std::vector<LatticeVector> hs = dual.rays;
    for (const auto& l : dual.lineality) {
      hs.push_back(l);
      hs.push_back(-l);
    }
    std::sort(hs.begin(), hs.end());
    cache_->halfspaces = hs;

    // lineality of the cone itself = kernel of the halfspace matrix
    if (vector_rank(hs, rank_) != rank_) {
      cache_->rays.reset();
      return;
    }
    std::vector<LatticeVector> rays;
    for (const auto& g : generators_) {
      std::vector<LatticeVector> tight;
      for (const auto& n : hs)
        if (pairing(g, n) == 0) tight.push_back(n);
      if (vector_rank(tight, rank_) + 1 == rank_) rays.push_back(g);
    }
    std::sort(rays.begin(), rays.end());
    cache_->rays = std::move(rays);
  }

  std::size_t rank_ = 0;
  std::vector<LatticeVector> generators_;
  std::shared_ptr<Cache> cache_;
};

/// sigma-dual = {m : <m, v> >= 0 for all v in sigma}, both representations populated.
inline RationalCone dual_cone(const RationalCone& c) {
  RationalCone d(c.rank(), c.halfspaces());
  if (c.is_strongly_convex() && c.is_full_dimensional()) {
    d.cache_->halfspaces = c.rays();
    d.cache_->rays = c.halfspaces();
    d.cache_->prefilled = true;
  }
  return d;
}

inline bool is_strongly_convex(const RationalCone& c) { return c.is_strongly_convex(); }
inline const std::vector<LatticeVector>& rays(const RationalCone& c) { return c.rays(); }

// ---------------------------------------------------------------------------
// Faces and triangulation

/// Ray-index sets (into c.rays()) of the facets of a strongly convex cone.
inline std::vector<std::vector<std::size_t>> facet_ray_sets(const RationalCone& c) {
  const auto& rs = c.rays();
  const std::size_t dim = c.dimension();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& n : c.halfspaces()) {
    std::vector<std::size_t> tight;
    std::vector<LatticeVector> vecs;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (pairing(rs[i], n) == 0) {
        tight.push_back(i);
        vecs.push_back(rs[i]);
      }
    }
    if (vector_rank(vecs, c.rank()) + 1 != dim) continue;
    if (std::find(out.begin(), out.end(), tight) == out.end()) out.push_back(std::move(tight));
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> pull(
    const std::vector<std::size_t>& face, std::size_t face_dim,
    const std::vector<LatticeVector>& rs, const std::vector<std::vector<std::size_t>>& facets,
    std::size_t rank) {
  if (face.size() == face_dim) return {face};
  const std::size_t apex = face.front();
  std::vector<std::vector<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(sub));
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    std::vector<LatticeVector> vecs;
    for (std::size_t i : sub) vecs.push_back(rs[i]);
    if (vector_rank(vecs, rank) + 1 != face_dim) continue;
    if (std::find(subfaces.begin(), subfaces.end(), sub) == subfaces.end()) {
      subfaces.push_back(std::move(sub));
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& sub : subfaces) {
    for (auto simplex : pull(sub, face_dim - 1, rs, facets, rank)) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace detail

/// Pulling triangulation of a strongly convex cone using only its rays.
/// Each simplex is a sorted index set into c.rays(). The apex pulled at each
/// level is the lowest-index ray of the face.
inline std::vector<std::vector<std::size_t>> pulling_triangulation(const RationalCone& c) {
  const auto& rs = c.rays();
  std::vector<std::size_t> all(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) all[i] = i;
  if (rs.empty()) return {};
  auto facets = facet_ray_sets(c);
  return detail::pull(all, c.dimension(), rs, facets, c.rank());
}

/// Lattice points sum(lambda_i g_i) with 0 <= lambda_i < 1 for linearly
/// independent g_1..g_d spanning Q^d (including the origin). There are
/// exactly |det| of them. Residues of Z^d modulo the row lattice are read
/// off the Hermite form, then moved into the parallelotope.
inline std::vector<LatticeVector> parallelotope_points(const std::vector<LatticeVector>& gens) {
  const std::size_t d = gens.size();
  if (d == 0) return {};
  const std::size_t rank = gens.front().rank();
  if (rank != d || vector_rank(gens, rank) != d) {
    throw std::invalid_argument("parallelotope_points: generators must form a basis of Q^d");
  }
  IntMatrix g = IntMatrix::from_rows(gens, d);
  HermiteForm hf = hermite_normal_form(g);
  RatMatrix gt = to_rat(g).transpose();  // columns are generators: gt * lambda = x

  std::vector<Integer> bounds(d);
  for (std::size_t i = 0; i < d; ++i) bounds[i] = hf.h(i, i);

  std::vector<LatticeVector> out;
  LatticeVector x(d);
  while (true) {
    auto sol = solve_linear(gt, to_rat(x));
    RatVector frac(d);
    for (std::size_t i = 0; i < d; ++i) frac[i] = sol->particular[i] - Rat(sol->particular[i].floor());
    RatVector y(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) y[j] += frac[i] * Rat(gens[i][j]);
    out.push_back(to_lattice(y));

    std::size_t k = 0;
    while (k < d) {
      x[k] += 1;
      if (x[k] < bounds[k]) break;
      x[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficients of x in the basis gens (x = sum lambda_i gens_i).
inline RatVector basis_coordinates(const std::vector<LatticeVector>& gens, const RatVector& x) {
  RatMatrix gt = rat_matrix_from_rows(gens, x.rank()).transpose();
  auto sol = solve_linear(gt, x);
  if (!sol || !sol->kernel_basis.empty()) {
    throw std::invalid_argument("basis_coordinates: not a basis or point outside span");
  }
  return sol->particular;
}

// ---------------------------------------------------------------------------
// Hilbert basis

struct HilbertBasis {
  std::vector<LatticeVector> elements;  // lexicographically sorted
};

/// Minimal generating set of the semigroup c intersected with Z^d. Candidates
/// are the rays and the half-open parallelotope points of every simplex of a
/// pulling triangulation; reducible candidates are removed.
inline HilbertBasis hilbert_basis(const RationalCone& c) {
  if (!c.is_strongly_convex()) throw PreconditionError("hilbert_basis: cone is not pointed");
  if (!c.is_full_dimensional()) {
    throw PreconditionError("hilbert_basis: cone is not full-dimensional");
  }
  const auto& rs = c.rays();
  std::set<LatticeVector> candidates(rs.begin(), rs.end());
  for (const auto& simplex : pulling_triangulation(c)) {
    std::vector<LatticeVector> gens;
    for (std::size_t i : simplex) gens.push_back(rs[i]);
    for (auto& p : parallelotope_points(gens))
      if (!p.is_zero()) candidates.insert(std::move(p));
  }
  HilbertBasis hb;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (c.contains(x - y)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.elements.push_back(x);
  }
  return hb;
}

// ---------------------------------------------------------------------------
// Smoothness

inline bool is_simplicial(const RationalCone& c) { return c.rays().size() == c.dimension(); }

/// Index of the sublattice spanned by the ray generators in the lattice
/// points of their span. Requires a simplicial cone.
inline Integer multiplicity(const RationalCone& c) {
  if (!is_simplicial(c)) throw PreconditionError("multiplicity: cone is not simplicial");
  return lattice_index(c.rays(), c.rank());
}

/// Ray generators extend to a lattice basis.
inline bool is_smooth_cone(const RationalCone& c) {
  return is_simplicial(c) && multiplicity(c) == 1;
}

}  // namespace toricideal
