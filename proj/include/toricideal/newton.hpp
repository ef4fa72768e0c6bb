#pragma once

/**
 * @file newton.hpp
 * @brief Monomial ideals on an affine toric variety and their Newton polyhedra.
 *
 * Exponents live in the semigroup sigma-dual intersected with M. The Newton
 * polyhedron conv(exponents) + sigma-dual is built from the cone over
 * {(e, 1)} and {(rho, 0)} in one dimension up; its facets other than the
 * height facet are the facets of the polyhedron, and its rays at height 1
 * are the vertices.
 */

#include "toricideal/cones.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace toricideal {

class MonomialIdeal {
 public:
  /// `ambient` is sigma-dual. Throws std::invalid_argument naming the
  /// violated halfspace if an exponent lies outside it.
  MonomialIdeal(RationalCone ambient, std::vector<LatticeVector> exponents)
      : ambient_(std::move(ambient)) {
    std::set<LatticeVector> seen;
    for (auto& e : exponents) {
      if (e.rank() != ambient_.rank()) {
        throw std::invalid_argument("MonomialIdeal: exponent " + e.str() + " has wrong rank");
      }
      for (const auto& n : ambient_.halfspaces()) {
        if (pairing(e, n) < 0) {
          throw std::invalid_argument("MonomialIdeal: exponent " + e.str() +
                                      " violates halfspace <m," + n.str() + "> >= 0");
        }
      }
      if (seen.insert(e).second) exponents_.push_back(std::move(e));
    }
    std::sort(exponents_.begin(), exponents_.end());
  }

  const RationalCone& ambient() const { return ambient_; }
  const std::vector<LatticeVector>& exponents() const { return exponents_; }
  std::size_t rank() const { return ambient_.rank(); }
  bool empty() const { return exponents_.empty(); }

  /// Exponents not of the form e' + s with e' another exponent and s a
  /// nonzero point of the semigroup.
  std::vector<LatticeVector> minimal_exponents() const {
    std::vector<LatticeVector> out;
    for (const auto& e : exponents_) {
      bool dominated = std::any_of(exponents_.begin(), exponents_.end(), [&](const auto& f) {
        return f != e && ambient_.contains(e - f);
      });
      if (!dominated) out.push_back(e);
    }
    return out;
  }

 private:
  RationalCone ambient_;
  std::vector<LatticeVector> exponents_;
};

/// {m : <m, normal> >= offset}
struct Facet {
  LatticeVector normal;
  Rat offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::vector<RatVector> vertices, std::vector<Facet> facets,
                   RationalCone recession)
      : vertices_(std::move(vertices)), facets_(std::move(facets)), recession_(std::move(recession)) {}

  /// The cone itself viewed as a polyhedron with apex 0.
  static NewtonPolyhedron from_cone(const RationalCone& dual) {
    std::vector<Facet> facets;
    for (const auto& n : dual.halfspaces()) facets.push_back({n, Rat(0)});
    return NewtonPolyhedron({RatVector(dual.rank())}, std::move(facets), dual);
  }

  std::size_t rank() const { return recession_.rank(); }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const RationalCone& recession() const { return recession_; }

  template <class V>
  bool contains(const V& m) const {
    for (const auto& f : facets_)
      if (pairing(m, f.normal) < f.offset) return false;
    return true;
  }

  template <class V>
  bool interior_contains(const V& m) const {
    for (const auto& f : facets_)
      if (pairing(m, f.normal) <= f.offset) return false;
    return true;
  }

  friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  RationalCone recession_;
};

/// conv(exponents) + sigma-dual in irredundant H-representation with its vertices.
inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  if (a.empty()) throw PreconditionError("newton_polyhedron: empty ideal");
  const std::size_t d = a.rank();
  const RationalCone& dual = a.ambient();
  std::vector<LatticeVector> lifted;
  for (const auto& e : a.exponents()) {
    LatticeVector h(d + 1);
    for (std::size_t i = 0; i < d; ++i) h[i] = e[i];
    h[d] = 1;
    lifted.push_back(std::move(h));
  }
  for (const auto& r : dual.rays()) {
    LatticeVector h(d + 1);
    for (std::size_t i = 0; i < d; ++i) h[i] = r[i];
    lifted.push_back(std::move(h));
  }
  RationalCone homogenized(d + 1, lifted);

  std::vector<Facet> facets;
  for (const auto& h : homogenized.halfspaces()) {
    LatticeVector n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = h[i];
    if (n.is_zero()) continue;  // the height facet s >= 0
    Integer g = 0;
    for (const auto& x : n) g = gcd_int(g, x);
    LatticeVector normal(d);
    for (std::size_t i = 0; i < d; ++i) normal[i] = n[i] / g;
    facets.push_back({normal, Rat(Integer(-h[d]), g)});
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& x, const Facet& y) { return x.normal < y.normal; });

  std::vector<RatVector> vertices;
  for (const auto& r : homogenized.rays()) {
    if (r[d] == 0) continue;
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rat(r[i], r[d]);
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end());
  return NewtonPolyhedron(std::move(vertices), std::move(facets), dual);
}

/// t * P: offsets and vertices scaled, normals and recession cone unchanged.
inline NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rat& t) {
  if (t.sign() <= 0) throw PreconditionError("scale: t must be positive, got " + t.str());
  std::vector<RatVector> vertices = p.vertices();
  for (auto& v : vertices) v *= t;
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset *= t;
  return NewtonPolyhedron(std::move(vertices), std::move(facets), p.recession());
}

/// shift + P.
inline NewtonPolyhedron translate(const NewtonPolyhedron& p, const RatVector& shift) {
  std::vector<RatVector> vertices = p.vertices();
  for (auto& v : vertices) v += shift;
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset += pairing(shift, f.normal);
  return NewtonPolyhedron(std::move(vertices), std::move(facets), p.recession());
}

}  // namespace toricideal
