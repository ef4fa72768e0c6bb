#pragma once

// Seeded desk-scale random instances shared by the unit and acceptance tests.

#include "toricideal/cones.hpp"
#include "toricideal/divisors.hpp"
#include "toricideal/newton.hpp"
#include "toricideal/resolution.hpp"

#include <random>
#include <vector>

namespace instances {

using namespace toricideal;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Pointed full-dimensional cone in rank 2 or 3 with at most `max_rays`
/// rays, coordinates in [-bound, bound] and (simplicial) multiplicity at
/// most `max_mult`.
inline RationalCone random_cone(std::mt19937_64& rng, std::size_t d, std::size_t max_rays = 4,
                                long bound = 3, long max_mult = 12) {
  while (true) {
    std::size_t n = d == 2 ? 2 : static_cast<std::size_t>(uniform(rng, 3, static_cast<long>(max_rays)));
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      LatticeVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = uniform(rng, -bound, bound);
      if (!v.is_zero()) gens.push_back(v);
    }
    if (gens.size() < d) continue;
    RationalCone c(d, gens);
    if (!c.is_full_dimensional() || !c.is_strongly_convex()) continue;
    if (c.rays().size() > max_rays) continue;
    bool ok = true;
    for (const auto& simplex : pulling_triangulation(c)) {
      std::vector<LatticeVector> vs;
      for (std::size_t i : simplex) vs.push_back(c.rays()[i]);
      if (lattice_index(vs, d) > max_mult) ok = false;
    }
    if (ok) return RationalCone(d, c.rays());
  }
}

/// A smooth cone: the image of the orthant under a random unimodular map.
inline RationalCone random_smooth_cone(std::mt19937_64& rng, std::size_t d) {
  while (true) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < d; ++i) {
      LatticeVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = uniform(rng, -2, 2);
      gens.push_back(v);
    }
    if (vector_rank(gens, d) != d) continue;
    Integer det = determinant(gens);
    if (det == 1 || det == -1) return RationalCone(d, gens);
  }
}

/// At most `max_gens` exponents in sigma-dual with coordinates in [-8, 8].
inline MonomialIdeal random_ideal(std::mt19937_64& rng, const RationalCone& sigma,
                                  std::size_t max_gens = 5, long bound = 8) {
  RationalCone dual = dual_cone(sigma);
  const std::size_t d = sigma.rank();
  std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_gens)));
  std::vector<LatticeVector> exps;
  while (exps.size() < n) {
    LatticeVector v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = uniform(rng, -bound, bound);
    if (dual.contains(v)) exps.push_back(v);
  }
  return MonomialIdeal(dual, exps);
}

/// Random Q-Cartier Delta: coefficients 1 + <w', v_i> for a random w' with
/// denominator at most `max_den`, plus an arbitrary part on simplicial cones.
/// With `effective`, every coefficient is nonnegative.
inline QDivisor random_delta(std::mt19937_64& rng, const RationalCone& sigma, long max_den = 4,
                             bool effective = true) {
  const auto& rays = sigma.rays();
  while (true) {
    std::vector<Rat> c;
    if (is_simplicial(sigma)) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        long q = uniform(rng, 1, max_den);
        c.push_back(Rat(Integer(uniform(rng, effective ? 0 : -q, 2 * q)), Integer(q)));
      }
    } else {
      long q = uniform(rng, 1, max_den);
      RatVector w(sigma.rank());
      for (auto& x : w) x = Rat(Integer(uniform(rng, -q, q)), Integer(q));
      for (const auto& v : rays) c.push_back(Rat(1) + pairing(w, v));
    }
    QDivisor delta(sigma, c);
    if (!effective || is_effective(delta)) return delta;
  }
}

/// Exponents from a fixed menu.
inline Rat random_t(std::mt19937_64& rng) {
  static const Rat menu[] = {Rat(1, 2), Rat(1), Rat(5, 3), Rat(3)};
  return menu[uniform(rng, 0, 3)];
}

/// A fan in rank 2 or 3: either one cone, or the normal fan of a random
/// Newton polyhedron over a random cone.
inline Fan random_fan(std::mt19937_64& rng, std::size_t d, long max_mult = 12) {
  RationalCone sigma = random_cone(rng, d, 4, 3, max_mult);
  if (uniform(rng, 0, 1) == 0) return Fan::from_cone(sigma);
  while (true) {
    MonomialIdeal a = random_ideal(rng, sigma, 3, 4);
    Fan f = log_resolution_fan(sigma, a);
    bool ok = true;
    for (std::size_t k = 0; k < f.cones().size(); ++k) {
      RationalCone c = f.cone(k);
      for (const auto& simplex : pulling_triangulation(c)) {
        std::vector<LatticeVector> vs;
        for (std::size_t i : simplex) vs.push_back(c.rays()[i]);
        if (lattice_index(vs, d) > max_mult) ok = false;
      }
    }
    if (ok) return f;
  }
}

}  // namespace instances
