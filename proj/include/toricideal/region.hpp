#pragma once

/**
 * @file region.hpp
 * @brief Monomial membership regions and their minimal generators.
 *
 * Every ideal computed by the library is the set of lattice points v of
 * sigma-dual satisfying finitely many integral inequalities <v, n> >= c with
 * each n in sigma. Such a set is closed under adding sigma-dual, so it is a
 * monomial ideal and has a unique finite minimal generating set.
 *
 * Search bound. Let l be the sum of the rays of sigma (strictly positive on
 * sigma-dual minus 0) and K the closed polyhedron cut out by the
 * inequalities inside sigma-dual. Every minimal generator is p + y with p in
 * conv(vertices of K) and y in the half-open parallelotope of a simplicial
 * subcone of sigma-dual spanned by rays, hence
 *     l(g) < max_vertex l + (sum of the d largest l(ray)).
 * Lattice points below that level are enumerated exhaustively; because l is
 * monotone for the semigroup order, minimality is decided exactly inside
 * the level set by testing g - h for each Hilbert basis element h.
 */

#include "toricideal/cones.hpp"
#include "toricideal/newton.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricideal {

/// <v, normal> >= bound
struct LatticeHalfspace {
  LatticeVector normal;
  Integer bound;
  friend bool operator==(const LatticeHalfspace&, const LatticeHalfspace&) = default;
};

class LatticeRegion {
 public:
  LatticeRegion(RationalCone dual, std::vector<LatticeHalfspace> halfspaces)
      : dual_(std::move(dual)), halfspaces_(std::move(halfspaces)) {}

  /// sigma-dual; the region is a subset of its lattice points.
  const RationalCone& ambient() const { return dual_; }
  const std::vector<LatticeHalfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const LatticeVector& v) const {
    if (!dual_.contains(v)) return false;
    for (const auto& h : halfspaces_)
      if (pairing(v, h.normal) < h.bound) return false;
    return true;
  }

  /// Every normal lies in sigma, i.e. the region is closed under adding sigma-dual.
  bool is_semigroup_closed() const {
    for (const auto& h : halfspaces_)
      for (const auto& r : dual_.rays())
        if (pairing(r, h.normal) < 0) return false;
    return true;
  }

 private:
  RationalCone dual_;
  std::vector<LatticeHalfspace> halfspaces_;
};

/// {v in sigma-dual cap M : v - shift in Int(body)}.
struct MembershipRegion {
  RatVector shift;
  NewtonPolyhedron body;

  bool contains(const LatticeVector& v) const {
    return body.recession().contains(v) && body.interior_contains(to_rat(v) - shift);
  }

  /// <v - w, n> > b  <=>  <v, n> >= floor(<w, n> + b) + 1 for integral v, n.
  LatticeRegion lattice_region() const {
    std::vector<LatticeHalfspace> hs;
    for (const auto& f : body.facets()) {
      Rat rhs = pairing(shift, f.normal) + f.offset;
      hs.push_back({f.normal, Integer(rhs.floor() + 1)});
    }
    return LatticeRegion(body.recession(), std::move(hs));
  }
};

namespace detail {

template <class T>
T floor_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Integer>) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
}

template <class T>
T ceil_div(const T& a, const T& b) {
  return -floor_div<T>(-a, b);
}

template <class T>
struct IntConstraint {
  std::vector<T> a;
  T c;  // <x, a> >= c
};

template <class T>
bool satisfies(const std::vector<IntConstraint<T>>& cs, const std::vector<T>& x) {
  for (const auto& k : cs) {
    T s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += k.a[i] * x[i];
    if (s < k.c) return false;
  }
  return true;
}

/// Lattice points inside box_lo..box_hi satisfying all constraints; the last
/// coordinate is solved for directly.
template <class T>
std::vector<std::vector<T>> enumerate_points(const std::vector<IntConstraint<T>>& cs,
                                             const std::vector<T>& box_lo,
                                             const std::vector<T>& box_hi) {
  const std::size_t d = box_lo.size();
  std::vector<std::vector<T>> out;
  std::vector<T> x(d, T(0));
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j + 1 == d) {
      T lo = box_lo[j], hi = box_hi[j];
      for (const auto& k : cs) {
        T s = 0;
        for (std::size_t i = 0; i < j; ++i) s += k.a[i] * x[i];
        T rhs = k.c - s;
        if (k.a[j] > 0) {
          T b = ceil_div<T>(rhs, k.a[j]);
          if (b > lo) lo = b;
        } else if (k.a[j] < 0) {
          T b = floor_div<T>(rhs, k.a[j]);
          if (b < hi) hi = b;
        } else if (rhs > 0) {
          return;
        }
        if (lo > hi) return;
      }
      for (T v = lo; v <= hi; ++v) {
        x[j] = v;
        out.push_back(x);
      }
      return;
    }
    for (T v = box_lo[j]; v <= box_hi[j]; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  if (d > 0) rec(0);
  return out;
}

template <class T>
std::vector<LatticeVector> minimal_points(const std::vector<IntConstraint<T>>& cs,
                                          const std::vector<T>& box_lo,
                                          const std::vector<T>& box_hi,
                                          const std::vector<std::vector<T>>& hilbert) {
  auto points = enumerate_points<T>(cs, box_lo, box_hi);
  std::vector<LatticeVector> out;
  std::vector<T> y(box_lo.size());
  for (const auto& x : points) {
    bool minimal = true;
    for (const auto& h : hilbert) {
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - h[i];
      if (satisfies(cs, y)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    LatticeVector v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if constexpr (std::is_same_v<T, Integer>) {
        v[i] = x[i];
      } else {
        v[i] = static_cast<long>(x[i]);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// The unique minimal set G with region = union of (g + sigma-dual cap M).
/// Empty when the region is empty. Sorted graded-lexicographically.
inline std::vector<LatticeVector> minimal_generators(const LatticeRegion& region) {
  const RationalCone& dual = region.ambient();
  if (!region.is_semigroup_closed()) {
    throw std::logic_error("minimal_generators: region is not closed under the semigroup");
  }
  const std::size_t d = dual.rank();
  const auto& sigma_rays = dual.halfspaces();
  const auto& dual_rays = dual.rays();

  LatticeVector level(d);
  for (const auto& r : sigma_rays) level += r;

  // vertices of K via the homogenized cone {(x, s) : <x,n> - c s >= 0, x in dual, s >= 0}
  std::vector<LatticeVector> lifted;
  auto lift = [d](const LatticeVector& n, const Integer& c) {
    LatticeVector h(d + 1);
    for (std::size_t i = 0; i < d; ++i) h[i] = n[i];
    h[d] = -c;
    return h;
  };
  for (const auto& h : region.halfspaces()) lifted.push_back(lift(h.normal, h.bound));
  for (const auto& r : sigma_rays) lifted.push_back(lift(r, 0));
  LatticeVector height(d + 1);
  height[d] = 1;
  lifted.push_back(height);
  ConeGenerators hom = cone_from_inequalities(lifted, d + 1);

  bool any_vertex = false;
  Rat max_level;
  for (const auto& r : hom.rays) {
    if (r[d] == 0) continue;
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rat(r[i], r[d]);
    Rat lv = pairing(v, level);
    if (!any_vertex || lv > max_level) max_level = lv;
    any_vertex = true;
  }
  if (!any_vertex) return {};

  std::vector<Integer> ray_levels;
  for (const auto& r : dual_rays) ray_levels.push_back(pairing(r, level));
  std::sort(ray_levels.rbegin(), ray_levels.rend());
  Integer bound = max_level.ceil();
  for (std::size_t i = 0; i < d && i < ray_levels.size(); ++i) bound += ray_levels[i];
  if (bound < 0) return {};

  // bounding box of {x in dual : l(x) <= bound} = conv(0, bound * rho / l(rho))
  std::vector<Integer> lo(d, Integer(0)), hi(d, Integer(0));
  for (std::size_t k = 0; k < dual_rays.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      Rat c = Rat(Integer(bound * dual_rays[k][i]), pairing(dual_rays[k], level));
      if (c.floor() < lo[i]) lo[i] = c.floor();
      if (c.ceil() > hi[i]) hi[i] = c.ceil();
    }
  }

  std::vector<detail::IntConstraint<Integer>> cs;
  for (const auto& r : sigma_rays) cs.push_back({r.coords(), Integer(0)});
  for (const auto& h : region.halfspaces()) cs.push_back({h.normal.coords(), h.bound});
  cs.push_back({(-level).coords(), Integer(-bound)});

  std::vector<std::vector<Integer>> hb;
  for (const auto& h : hilbert_basis(dual).elements) hb.push_back(h.coords());

  // int64 fast path when every intermediate sum provably fits
  auto small = [](const Integer& x) { return abs_int(x) < (Integer(1) << 24); };
  bool fits = std::all_of(lo.begin(), lo.end(), small) && std::all_of(hi.begin(), hi.end(), small);
  for (const auto& k : cs) {
    fits = fits && abs_int(k.c) < (Integer(1) << 40);
    for (const auto& a : k.a) fits = fits && small(a);
  }
  for (const auto& h : hb)
    for (const auto& a : h) fits = fits && small(a);

  std::vector<LatticeVector> gens;
  if (fits) {
    auto cvt = [](const std::vector<Integer>& v) {
      std::vector<std::int64_t> o;
      for (const auto& x : v) o.push_back(to_int64(x));
      return o;
    };
    std::vector<detail::IntConstraint<std::int64_t>> cs64;
    for (const auto& k : cs) cs64.push_back({cvt(k.a), to_int64(k.c)});
    std::vector<std::vector<std::int64_t>> hb64;
    for (const auto& h : hb) hb64.push_back(cvt(h));
    gens = detail::minimal_points<std::int64_t>(cs64, cvt(lo), cvt(hi), hb64);
  } else {
    gens = detail::minimal_points<Integer>(cs, lo, hi, hb);
  }
  sort_graded_lex(gens);
  return gens;
}

inline std::vector<LatticeVector> minimal_generators(const MembershipRegion& region) {
  return minimal_generators(region.lattice_region());
}

}  // namespace toricideal
