#pragma once

/**
 * @file fourier_motzkin.hpp
 * @brief Exact Fourier-Motzkin elimination for mixed strict/non-strict systems.
 *
 * A constraint reads  sum_i a_i x_i + c > 0  (strict) or  >= 0.  Combining a
 * strict with anything yields a strict constraint. Redundant combinations
 * are pruned with Chernikov's rule: after eliminating k variables, a
 * constraint derived from more than k + 1 originals is implied by the
 * others (strictness included, since the decomposition into minimal
 * combinations covers every original it used).
 */

#include "toricideal/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace toricideal {

struct LinearConstraint {
  std::vector<Integer> coeffs;
  Integer constant;
  bool strict = false;
  boost::dynamic_bitset<> history;  // originals this constraint was combined from

  bool holds_at_zero_coeffs() const { return strict ? constant > 0 : constant >= 0; }
  bool is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& a) { return a == 0; });
  }
};

namespace detail {

inline void normalize(LinearConstraint& k) {
  Integer g = abs_int(k.constant);
  for (const auto& a : k.coeffs) g = gcd_int(g, a);
  if (g > 1) {
    for (auto& a : k.coeffs) a /= g;
    k.constant /= g;
  }
}

}  // namespace detail

/// Attaches one history bit per constraint so elimination can prune.
inline void mark_originals(std::vector<LinearConstraint>& system) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    system[i].history = boost::dynamic_bitset<>(system.size());
    system[i].history.set(i);
    detail::normalize(system[i]);
  }
}

/// Projects the system onto the variables not listed in `vars` (their
/// coefficients become zero). Expects mark_originals to have been called.
/// An infeasible projection is reported as a single violated constant constraint.
inline std::vector<LinearConstraint> eliminate_variables(std::vector<LinearConstraint> system,
                                                         const std::vector<std::size_t>& vars) {
  std::size_t eliminated = 0;
  for (std::size_t var : vars) {
    std::vector<LinearConstraint> pos, neg, next;
    for (auto& k : system) {
      if (var >= k.coeffs.size()) throw std::invalid_argument("eliminate_variables: bad variable");
      if (k.coeffs[var] > 0) pos.push_back(std::move(k));
      else if (k.coeffs[var] < 0) neg.push_back(std::move(k));
      else next.push_back(std::move(k));
    }
    ++eliminated;
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        boost::dynamic_bitset<> hist = p.history | n.history;
        if (hist.count() > eliminated + 1) continue;
        Integer wp = -n.coeffs[var];  // > 0
        Integer wn = p.coeffs[var];   // > 0
        LinearConstraint c;
        c.coeffs.resize(p.coeffs.size());
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = wp * p.coeffs[i] + wn * n.coeffs[i];
        c.constant = wp * p.constant + wn * n.constant;
        c.strict = p.strict || n.strict;
        c.history = std::move(hist);
        detail::normalize(c);
        next.push_back(std::move(c));
      }
    }

    // drop satisfied constants, short-circuit on a violated one, deduplicate
    std::map<std::vector<Integer>, std::size_t> index;
    system.clear();
    for (auto& k : next) {
      if (k.is_constant()) {
        if (k.holds_at_zero_coeffs()) continue;
        return {std::move(k)};
      }
      std::vector<Integer> key = k.coeffs;
      key.push_back(k.constant);
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(std::move(key), system.size());
        system.push_back(std::move(k));
      } else if (k.strict && !system[it->second].strict) {
        system[it->second] = std::move(k);
      }
    }
  }
  return system;
}

/// True iff some real point satisfies every constraint.
inline bool is_feasible(std::vector<LinearConstraint> system) {
  if (system.empty()) return true;
  mark_originals(system);
  std::vector<std::size_t> vars(system.front().coeffs.size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  for (const auto& k : eliminate_variables(std::move(system), vars))
    if (!k.holds_at_zero_coeffs()) return false;
  return true;
}

}  // namespace toricideal
