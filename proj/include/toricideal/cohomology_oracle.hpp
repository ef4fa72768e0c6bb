#pragma once

/**
 * @file cohomology_oracle.hpp
 * @brief Box-truncated model of top local cohomology of a toric ring, the
 *        kernel of multiplication by x^w, and its annihilator in the
 *        canonical module.
 *
 * Everything is decided degree by degree on the M-grading. Degrees of the
 * fractional lattice (1/n)M are stored scaled by n.
 *
 * The annihilator is computed after twisting by a point a of Int(sigma-dual)
 * with K_X + Delta + div x^a effective: v is a member iff v + a annihilates
 * the twisted kernel. The kernel window is centred at a so that the witness
 * t = -(v + a) of every box point v is inside it.
 */

#include "toricideal/divisors.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace toricideal {

struct TruncationBox {
  long bound = 8;          // B: window half-width per coordinate
  long lattice_scale = 1;  // n: degrees live in (1/n)M
  std::optional<LatticeVector> offset;  // window centre for lambda; origin when unset

  void validate() const {
    if (bound < 0) throw std::invalid_argument("TruncationBox: bound must be nonnegative");
    if (lattice_scale < 1) throw std::invalid_argument("TruncationBox: lattice_scale must be positive");
  }
};

struct GradedKernel {
  std::set<LatticeVector> points;  // degrees t, with -t in Int(sigma-dual)
};

namespace detail {

/// Calls f on every integer point of centre + [-radius, radius]^d.
inline void for_each_in_box(const LatticeVector& centre, long radius,
                            const std::function<void(const LatticeVector&)>& f) {
  const std::size_t d = centre.rank();
  LatticeVector x = centre;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == d) {
      f(x);
      return;
    }
    for (long k = -radius; k <= radius; ++k) {
      x[j] = centre[j] + k;
      rec(j + 1);
    }
  };
  rec(0);
}

inline bool interior_of_dual(const RationalCone& sigma, const RatVector& x) {
  for (const auto& v : sigma.rays())
    if (pairing(x, v).sign() <= 0) return false;
  return true;
}

}  // namespace detail

/// {-n lambda : lambda in Int(sigma-dual) cap (1/n)M, |lambda_j - offset_j| <= B}.
inline std::set<LatticeVector> cohomology_monomials(const RationalCone& sigma,
                                                    const TruncationBox& box) {
  box.validate();
  const long n = box.lattice_scale;
  LatticeVector centre = box.offset.value_or(LatticeVector(sigma.rank()));
  std::set<LatticeVector> out;
  detail::for_each_in_box(centre * Integer(n), box.bound * n, [&](const LatticeVector& scaled) {
    bool interior = true;
    for (const auto& v : sigma.rays())
      if (pairing(scaled, v) <= 0) interior = false;
    if (interior) out.insert(-scaled);
  });
  return out;
}

/// Degrees t = -lambda over M with t + w not in -Int(sigma-dual).
inline GradedKernel kernel_monomials(const RationalCone& sigma, const RatVector& w,
                                     const TruncationBox& box) {
  box.validate();
  for (const auto& x : w) {
    if (!(x * Rat(box.lattice_scale)).is_integer()) {
      throw std::invalid_argument("kernel_monomials: " + w.str() + " is not in (1/" +
                                  std::to_string(box.lattice_scale) + ")M");
    }
  }
  TruncationBox integral = box;
  integral.lattice_scale = 1;
  GradedKernel k;
  for (const auto& t : cohomology_monomials(sigma, integral)) {
    if (!detail::interior_of_dual(sigma, -(to_rat(t) + w))) k.points.insert(t);
  }
  return k;
}

/// The pairing of x^t with x^v vanishes iff <t + v, v_i> > 0 for some ray.
inline bool pairs_to_zero(const LatticeVector& t, const LatticeVector& v, const RationalCone& sigma) {
  LatticeVector s = t + v;
  for (const auto& r : sigma.rays())
    if (pairing(s, r) > 0) return true;
  return false;
}

/// Least a in Int(sigma-dual) cap M with <a, v_i> >= max(1, -<w, v_i>).
inline LatticeVector oracle_twist(const RationalCone& sigma, const RatVector& w) {
  const auto& rs = sigma.rays();
  return detail::first_dual_point(sigma, [&](const LatticeVector& a) {
    for (const auto& v : rs) {
      Rat p(pairing(a, v));
      if (p < Rat(1) || p + pairing(w, v) < Rat(0)) return false;
    }
    return true;
  });
}

/// Members v of sigma-dual cap M with |v_j| <= B whose twist v + a
/// annihilates every kernel degree in the window. The box's offset, when
/// set, is used as the twist a and must satisfy the conditions above.
inline std::set<LatticeVector> oracle_pair_ideal(const RationalCone& sigma, const QDivisor& delta,
                                                 const TruncationBox& box) {
  box.validate();
  PairWeight pw = pair_weight(sigma, delta);
  LatticeVector a = box.offset ? *box.offset : oracle_twist(sigma, pw.w);
  for (const auto& v : sigma.rays()) {
    Rat p(pairing(a, v));
    if (p < Rat(1) || p + pairing(pw.w, v) < Rat(0)) {
      throw std::invalid_argument("oracle_pair_ideal: twist " + a.str() + " does not effectivize");
    }
  }
  TruncationBox window = box;
  window.offset = a;
  GradedKernel k = kernel_monomials(sigma, pw.w + to_rat(a), window);

  std::set<LatticeVector> out;
  detail::for_each_in_box(LatticeVector(sigma.rank()), box.bound, [&](const LatticeVector& v) {
    for (const auto& r : sigma.rays())
      if (pairing(v, r) < 0) return;
    LatticeVector shifted = v + a;
    for (const auto& t : k.points)
      if (!pairs_to_zero(t, shifted, sigma)) return;
    out.insert(v);
  });
  return out;
}

}  // namespace toricideal
