#pragma once

/**
 * @file divisors.hpp
 * @brief Torus-invariant Q-divisors on the affine toric variety of sigma.
 *
 * A divisor is a coefficient per ray of sigma, in the lexicographic ray
 * order returned by RationalCone::rays().
 */

#include "toricideal/cones.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toricideal {

class QDivisor {
 public:
  QDivisor(RationalCone sigma, std::vector<Rat> coeffs)
      : sigma_(std::move(sigma)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sigma_.rays().size()) {
      throw std::invalid_argument("QDivisor: " + std::to_string(coeffs_.size()) +
                                  " coefficients for " + std::to_string(sigma_.rays().size()) +
                                  " rays");
    }
  }

  static QDivisor zero(const RationalCone& sigma) {
    return QDivisor(sigma, std::vector<Rat>(sigma.rays().size(), Rat(0)));
  }

  const RationalCone& cone() const { return sigma_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

  friend QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("QDivisor: size mismatch");
    std::vector<Rat> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return QDivisor(a.sigma_, std::move(c));
  }

  friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].str();
    }
    return s + "]";
  }

 private:
  RationalCone sigma_;
  std::vector<Rat> coeffs_;
};

/// w with div(x^u) = r (K_X + Delta), u = r w, r minimal.
struct PairWeight {
  RatVector w;
  Integer r;
  LatticeVector u;
};

/// K_X = -sum D_i.
inline QDivisor canonical_divisor(const RationalCone& sigma) {
  return QDivisor(sigma, std::vector<Rat>(sigma.rays().size(), Rat(-1)));
}

/// div(x^v) = sum <v, v_i> D_i.
template <class V>
QDivisor div_monomial(const V& v, const RationalCone& sigma) {
  std::vector<Rat> c;
  for (const auto& ray : sigma.rays()) c.push_back(Rat(pairing(v, ray)));
  return QDivisor(sigma, std::move(c));
}

inline bool is_effective(const QDivisor& d) {
  return std::all_of(d.coeffs().begin(), d.coeffs().end(), [](const Rat& c) { return c.sign() >= 0; });
}

/// w in M_Q with <w, v_i> = D_i for every ray, or nullopt. When the rays do
/// not span, the solution orthogonal to the solution space's directions
/// (minimum norm) is returned.
inline std::optional<RatVector> is_q_cartier(const QDivisor& d) {
  const auto& rs = d.cone().rays();
  const std::size_t rank = d.cone().rank();
  RatMatrix a = rat_matrix_from_rows(rs, rank);
  RatVector b(d.coeffs());
  auto sol = solve_linear(a, b);
  if (!sol) return std::nullopt;
  if (sol->kernel_basis.empty()) return sol->particular;
  // w = A^T y with (A A^T) y = b lies in the row space of A
  RatMatrix at = a.transpose();
  auto y = solve_linear(a * at, b);
  return at * y->particular;
}

/// Requires sigma strongly convex and full-dimensional so the rays span N_Q
/// and w is unique. Throws NotQCartier when K_X + Delta has no witness.
inline PairWeight pair_weight(const RationalCone& sigma, const QDivisor& delta) {
  if (!sigma.is_strongly_convex() || !sigma.is_full_dimensional()) {
    throw PreconditionError("pair_weight: sigma must be strongly convex and full-dimensional, got " +
                            sigma.str() + " in rank " + std::to_string(sigma.rank()));
  }
  QDivisor kd = canonical_divisor(sigma) + delta;
  auto w = is_q_cartier(kd);
  if (!w) throw NotQCartier("K_X + Delta = " + kd.str() + " is not Q-Cartier");
  Integer r = 1;
  for (const auto& x : *w) r = lcm_int(r, x.den());
  LatticeVector u(w->rank());
  for (std::size_t i = 0; i < w->rank(); ++i) u[i] = (*w)[i].num() * (r / (*w)[i].den());
  return {*w, r, u};
}

namespace detail {

/// All integer points with sum |x_i| == norm, lexicographically ascending.
inline std::vector<LatticeVector> l1_shell(std::size_t rank, long norm) {
  std::vector<LatticeVector> out;
  LatticeVector cur(rank);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == rank) {
      if (left == 0) {
        cur[i] = 0;
        out.push_back(cur);
      } else {
        cur[i] = -left;
        out.push_back(cur);
        cur[i] = left;
        out.push_back(cur);
      }
      return;
    }
    for (long x = -left; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - (x < 0 ? -x : x));
    }
  };
  if (rank == 0) return out;
  rec(0, norm);
  std::sort(out.begin(), out.end());
  return out;
}

/// First lattice point of sigma-dual (ordered by L1 norm, then
/// lexicographically) satisfying `accept`.
template <class Pred>
LatticeVector first_dual_point(const RationalCone& sigma, Pred accept) {
  for (long norm = 0;; ++norm) {
    for (const auto& a : l1_shell(sigma.rank(), norm)) {
      bool in_dual = std::all_of(sigma.rays().begin(), sigma.rays().end(),
                                 [&](const auto& v) { return pairing(a, v) >= 0; });
      if (in_dual && accept(a)) return a;
    }
    if (norm > 1'000'000) throw std::logic_error("first_dual_point: search did not terminate");
  }
}

}  // namespace detail

/// Smallest a in sigma-dual intersected with M (L1 norm, then lexicographic)
/// making D + div(x^a) effective.
inline LatticeVector effectivizing_shift(const RationalCone& sigma, const QDivisor& d) {
  if (!sigma.is_full_dimensional() || !sigma.is_strongly_convex()) {
    throw PreconditionError("effectivizing_shift: sigma must be pointed and full-dimensional");
  }
  const auto& rs = sigma.rays();
  return detail::first_dual_point(sigma, [&](const LatticeVector& a) {
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (Rat(pairing(a, rs[i])) + d[i] < Rat(0)) return false;
    return true;
  });
}

}  // namespace toricideal
