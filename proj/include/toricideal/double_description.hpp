#pragma once

/**
 * @file double_description.hpp
 * @brief Incremental double description: generators of {x : <a_k, x> >= 0}.
 *
 * Constraints are inserted one at a time. The current cone is kept as a
 * lineality basis plus extreme rays modulo the lineality space. A constraint
 * that is nonzero on the lineality space shrinks it by one; otherwise rays
 * are split into positive, zero and negative parts and each adjacent
 * (positive, negative) pair contributes one new ray. Adjacency uses the
 * combinatorial test on zero sets, which is exact because the ray list is
 * always irredundant.
 *
 * All arithmetic is integral; vectors are kept primitive.
 */

#include "toricideal/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace toricideal {

struct ConeGenerators {
  std::vector<LatticeVector> lineality;  // basis of the lineality space
  std::vector<LatticeVector> rays;       // extreme rays modulo lineality, primitive, sorted
};

namespace detail {

inline LatticeVector primitive_or_zero(const LatticeVector& v) {
  return v.is_zero() ? v : primitive(v);
}

// a*x - b*y with a, b scalars
inline LatticeVector combine(const Integer& a, const LatticeVector& x, const Integer& b,
                             const LatticeVector& y) {
  LatticeVector r(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) r[i] = a * x[i] - b * y[i];
  return primitive_or_zero(r);
}

}  // namespace detail

/// Generators of the cone {x in Q^dim : <a, x> >= 0 for every a in constraints}.
inline ConeGenerators cone_from_inequalities(std::span<const LatticeVector> constraints,
                                             std::size_t dim) {
  std::vector<LatticeVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<LatticeVector> rays;
  std::vector<boost::dynamic_bitset<>> zeros;  // zeros[r] bit k: constraint k tight at ray r
  const std::size_t m = constraints.size();

  for (std::size_t k = 0; k < m; ++k) {
    const LatticeVector& a = constraints[k];
    if (a.rank() != dim) throw std::invalid_argument("cone_from_inequalities: rank mismatch");

    auto lin_it = std::find_if(lineality.begin(), lineality.end(),
                               [&](const LatticeVector& l) { return pairing(a, l) != 0; });
    if (lin_it != lineality.end()) {
      LatticeVector ell = *lin_it;
      lineality.erase(lin_it);
      Integer al = pairing(a, ell);
      if (al < 0) {
        ell = -ell;
        al = -al;
      }
      for (auto& l : lineality) {
        Integer v = pairing(a, l);
        if (v != 0) l = detail::combine(al, l, v, ell);
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        Integer v = pairing(a, rays[r]);
        if (v != 0) rays[r] = detail::combine(al, rays[r], v, ell);
        zeros[r].set(k);
      }
      rays.push_back(ell);
      boost::dynamic_bitset<> z(m);
      // ell is tight on every earlier constraint (they vanish on lineality)
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      zeros.push_back(std::move(z));
      continue;
    }

    std::vector<std::size_t> pos, neg, zero;
    std::vector<Integer> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = pairing(a, rays[r]);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else zero.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r : zero) zeros[r].set(k);
      continue;
    }

    const std::size_t quotient_dim = dim - lineality.size();
    std::vector<LatticeVector> next_rays;
    std::vector<boost::dynamic_bitset<>> next_zeros;
    for (std::size_t r : pos) {
      next_rays.push_back(rays[r]);
      next_zeros.push_back(zeros[r]);
    }
    for (std::size_t r : zero) {
      next_rays.push_back(rays[r]);
      zeros[r].set(k);
      next_zeros.push_back(zeros[r]);
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        boost::dynamic_bitset<> common = zeros[p] & zeros[n];
        if (quotient_dim >= 2 && common.count() + 2 < quotient_dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.is_subset_of(zeros[o])) adjacent = false;
        }
        if (!adjacent) continue;
        Integer neg_val = -val[n];
        // val[p] * ray_n + (-val[n]) * ray_p: both weights positive, tight on a
        LatticeVector nr(dim);
        for (std::size_t i = 0; i < dim; ++i) nr[i] = val[p] * rays[n][i] + neg_val * rays[p][i];
        next_rays.push_back(primitive(nr));
        common.set(k);
        next_zeros.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    zeros = std::move(next_zeros);
  }

  for (auto& l : lineality) l = primitive(l);
  std::sort(rays.begin(), rays.end());
  return {std::move(lineality), std::move(rays)};
}

}  // namespace toricideal
