#pragma once

/**
 * @file resolution.hpp
 * @brief Fans, star subdivisions, smooth refinement and the multiplier
 *        ideal computed on a toric log resolution.
 *
 * A Fan stores a global list of primitive rays and its maximal cones as
 * sorted index sets into that list; faces are implicit. Cone lists are kept
 * sorted so that equal operation sequences give identical fans.
 */

#include "toricideal/divisors.hpp"
#include "toricideal/newton.hpp"
#include "toricideal/region.hpp"
#include "toricideal/test_ideals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace toricideal {

class Fan {
 public:
  using Indices = std::vector<std::size_t>;

  /// `cones` index into `rays`; each must list exactly the extreme rays of
  /// a strongly convex cone.
  Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Indices> cones)
      : rank_(rank), rays_(std::move(rays)), cones_(std::move(cones)) {
    for (const auto& r : rays_) {
      if (r.rank() != rank_ || r.is_zero()) throw std::invalid_argument("Fan: bad ray " + r.str());
    }
    for (auto& c : cones_) {
      std::sort(c.begin(), c.end());
      for (std::size_t i : c)
        if (i >= rays_.size()) throw std::invalid_argument("Fan: ray index out of range");
      if (!cone(c).is_strongly_convex()) throw std::invalid_argument("Fan: cone is not pointed");
    }
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  }

  /// The fan of all faces of a single strongly convex cone.
  static Fan from_cone(const RationalCone& c) {
    Indices all(c.rays().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Fan(c.rank(), c.rays(), {all});
  }

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<Indices>& cones() const { return cones_; }

  RationalCone cone(const Indices& idx) const {
    std::vector<LatticeVector> gens;
    for (std::size_t i : idx) gens.push_back(rays_[i]);
    return RationalCone(rank_, std::move(gens));
  }
  RationalCone cone(std::size_t k) const { return cone(cones_[k]); }

  template <class V>
  bool support_contains(const V& v) const {
    for (std::size_t k = 0; k < cones_.size(); ++k)
      if (cone(k).contains(v)) return true;
    return false;
  }

  bool is_smooth() const {
    for (std::size_t k = 0; k < cones_.size(); ++k)
      if (!is_smooth_cone(cone(k))) return false;
    return true;
  }

  /// Rays actually used by some cone, lexicographically sorted.
  std::vector<LatticeVector> used_rays() const {
    std::set<LatticeVector> s;
    for (const auto& c : cones_)
      for (std::size_t i : c) s.insert(rays_[i]);
    return {s.begin(), s.end()};
  }

  /// Maximal cones as sorted ray lists, independent of ray numbering.
  std::vector<std::vector<LatticeVector>> canonical() const {
    std::vector<std::vector<LatticeVector>> out;
    for (const auto& c : cones_) {
      std::vector<LatticeVector> vs;
      for (std::size_t i : c) vs.push_back(rays_[i]);
      std::sort(vs.begin(), vs.end());
      out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.canonical() == b.canonical();
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < cones_.size(); ++k) {
      s += std::to_string(k) + ": Cone(";
      for (std::size_t j = 0; j < cones_[k].size(); ++j) {
        if (j) s += ", ";
        s += rays_[cones_[k][j]].str();
      }
      s += ")\n";
    }
    return s;
  }

 private:
  std::size_t rank_;
  std::vector<LatticeVector> rays_;
  std::vector<Indices> cones_;
};

/// Replaces every maximal cone containing v by the cones over v and those of
/// its facets that miss v. Unchanged cones are kept; when v is already a ray
/// the ray is reused (a simplicial cone is then left as it is).
inline Fan star_subdivision(const Fan& f, const LatticeVector& v) {
  if (v.rank() != f.rank()) throw std::invalid_argument("star_subdivision: rank mismatch");
  if (v.is_zero()) throw std::invalid_argument("star_subdivision: v is zero");
  if (primitive(v) != v) throw std::invalid_argument("star_subdivision: " + v.str() + " is not primitive");
  if (!f.support_contains(v)) {
    throw std::invalid_argument("star_subdivision: " + v.str() + " lies outside the support");
  }

  std::vector<LatticeVector> rays = f.rays();
  std::size_t vi = std::find(rays.begin(), rays.end(), v) - rays.begin();
  if (vi == rays.size()) rays.push_back(v);

  std::vector<Fan::Indices> out;
  for (std::size_t k = 0; k < f.cones().size(); ++k) {
    const auto& idx = f.cones()[k];
    RationalCone c = f.cone(k);
    if (!c.contains(v)) {
      out.push_back(idx);
      continue;
    }
    // map the cone's own (sorted) rays back to global indices
    std::map<LatticeVector, std::size_t> global;
    for (std::size_t i : idx) global[rays[i]] = i;
    for (const auto& facet : facet_ray_sets(c)) {
      bool has_v = false;
      Fan::Indices g;
      for (std::size_t j : facet) {
        std::size_t gi = global.at(c.rays()[j]);
        if (gi == vi) has_v = true;
        g.push_back(gi);
      }
      if (has_v) continue;
      // the facet misses v iff v is off its hyperplane
      std::vector<LatticeVector> vecs;
      for (std::size_t j : facet) vecs.push_back(c.rays()[j]);
      vecs.push_back(v);
      if (vector_rank(vecs, f.rank()) != c.dimension()) continue;
      g.push_back(vi);
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
  }
  return Fan(f.rank(), std::move(rays), std::move(out));
}

struct SubdivisionStep {
  std::size_t cone_id;  // index of the cone that triggered the step
  LatticeVector point;
  friend bool operator==(const SubdivisionStep&, const SubdivisionStep&) = default;
};

struct ResolutionResult {
  Fan refined;
  std::vector<SubdivisionStep> steps;
  std::vector<LatticeVector> rays;  // rays of the refined fan, sorted
};

/// One "subdivide <id> at (a,b,...)" line per step.
inline std::string format_steps(const std::vector<SubdivisionStep>& steps) {
  std::string s;
  for (const auto& st : steps) s += "subdivide " + std::to_string(st.cone_id) + " at " + st.point.str() + "\n";
  return s;
}

inline std::vector<SubdivisionStep> parse_steps(const std::string& text) {
  std::vector<SubdivisionStep> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string word, at, vec;
    std::size_t id = 0;
    std::istringstream ls(line);
    if (!(ls >> word >> id >> at) || word != "subdivide" || at != "at") {
      throw std::invalid_argument("parse_steps: malformed line '" + line + "'");
    }
    std::getline(ls, vec);
    auto lp = vec.find('('), rp = vec.find(')');
    if (lp == std::string::npos || rp == std::string::npos) {
      throw std::invalid_argument("parse_steps: malformed vector in '" + line + "'");
    }
    std::vector<Integer> coords;
    std::string body = vec.substr(lp + 1, rp - lp - 1);
    std::istringstream cs(body);
    std::string tok;
    while (std::getline(cs, tok, ',')) coords.push_back(Integer(tok));
    out.push_back({id, LatticeVector(std::move(coords))});
  }
  return out;
}

inline Fan replay(Fan f, const std::vector<SubdivisionStep>& steps) {
  for (const auto& st : steps) f = star_subdivision(f, st.point);
  return f;
}

namespace detail {

inline std::string multiplicity_profile(const Fan& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.cones().size(); ++k) {
    RationalCone c = f.cone(k);
    if (k) s += ", ";
    s += is_simplicial(c) ? multiplicity(c).get_str() : std::string("non-simplicial");
  }
  return s + "]";
}

/// A ray of c whose pulling changes c: at least two facets miss it.
inline std::optional<LatticeVector> pulling_ray(const RationalCone& c) {
  auto facets = facet_ray_sets(c);
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    std::size_t missing = 0;
    for (const auto& f : facets)
      if (!std::binary_search(f.begin(), f.end(), i)) ++missing;
    if (missing >= 2) return c.rays()[i];
  }
  return std::nullopt;
}

}  // namespace detail

/// Smooth refinement by star subdivisions. Non-simplicial cones are first
/// pulled at their own rays; then the cone of largest multiplicity is
/// subdivided at its parallelotope point of least coefficient sum.
inline ResolutionResult resolve(const Fan& input) {
  Fan f = input;
  std::vector<SubdivisionStep> steps;
  for (std::size_t k = 0; k < f.cones().size(); ++k) {
    RationalCone c = f.cone(k);
    if (c.dimension() != f.rank()) {
      throw ResolutionError("resolve: maximal cone " + c.str() + " is not full-dimensional");
    }
  }

  std::size_t guard = 0;
  while (true) {
    bool changed = false;
    for (std::size_t k = 0; k < f.cones().size(); ++k) {
      RationalCone c = f.cone(k);
      if (is_simplicial(c)) continue;
      auto r = detail::pulling_ray(c);
      if (!r) throw ResolutionError("resolve: no pulling ray for " + c.str());
      steps.push_back({k, *r});
      f = star_subdivision(f, *r);
      changed = true;
      break;
    }
    if (!changed) break;
    if (++guard > 64 * (input.rays().size() + 1) * (input.cones().size() + 1)) {
      throw ResolutionError("resolve: triangulation did not terminate");
    }
  }

  Integer total = 0;
  for (std::size_t k = 0; k < f.cones().size(); ++k) total += multiplicity(f.cone(k));
  const Integer cap = 64 * total;

  for (Integer iter = 0;; ++iter) {
    std::size_t worst = 0;
    Integer worst_mult = 0;
    for (std::size_t k = 0; k < f.cones().size(); ++k) {
      Integer m = multiplicity(f.cone(k));
      if (m > worst_mult) {
        worst_mult = m;
        worst = k;
      }
    }
    if (worst_mult <= 1) break;
    if (iter >= cap) {
      throw ResolutionError("resolve: exceeded " + cap.get_str() +
                            " subdivisions; multiplicities " + detail::multiplicity_profile(f));
    }
    const RationalCone c = f.cone(worst);
    const auto& gens = c.rays();
    std::optional<LatticeVector> best;
    Rat best_sum;
    for (const auto& p : parallelotope_points(gens)) {
      if (p.is_zero()) continue;
      Rat s;
      for (const auto& x : basis_coordinates(gens, to_rat(p))) s += x;
      if (!best || s < best_sum || (s == best_sum && graded_lex_less(p, *best))) {
        best = p;
        best_sum = s;
      }
    }
    steps.push_back({worst, *best});
    f = star_subdivision(f, *best);
  }
  std::vector<LatticeVector> rays = f.used_rays();
  return {std::move(f), std::move(steps), std::move(rays)};
}

/// min over exponents g of <g, e>.
inline Integer ord_along_ray(const LatticeVector& e, const MonomialIdeal& a) {
  if (a.empty()) throw PreconditionError("ord_along_ray: empty ideal");
  Integer m = pairing(a.exponents().front(), e);
  for (const auto& g : a.exponents()) m = std::min(m, Integer(pairing(g, e)));
  return m;
}

/// Normal fan of Newt(a): one maximal cone per vertex p, dual to the
/// tangent cone generated by e - p and the rays of sigma-dual. Its support
/// is sigma and the ideal is principal on each of its cones.
inline Fan log_resolution_fan(const RationalCone& sigma, const MonomialIdeal& a) {
  NewtonPolyhedron p = newton_polyhedron(a);
  std::vector<LatticeVector> rays;
  std::vector<Fan::Indices> cones;
  auto index_of = [&rays](const LatticeVector& r) {
    auto it = std::find(rays.begin(), rays.end(), r);
    if (it != rays.end()) return static_cast<std::size_t>(it - rays.begin());
    rays.push_back(r);
    return rays.size() - 1;
  };
  for (const auto& vertex : p.vertices()) {
    LatticeVector pv = to_lattice(vertex);
    std::vector<LatticeVector> tangent;
    for (const auto& e : a.exponents())
      if (e != pv) tangent.push_back(e - pv);
    for (const auto& r : a.ambient().rays()) tangent.push_back(r);
    RationalCone t(sigma.rank(), std::move(tangent));
    Fan::Indices idx;
    for (const auto& n : t.halfspaces()) idx.push_back(index_of(n));
    cones.push_back(std::move(idx));
  }
  return Fan(sigma.rank(), std::move(rays), std::move(cones));
}

/// Multiplier ideal read off a smooth refinement of the normal fan:
/// <v, e> >= floor(<w, e> + t ord_e(a)) + 1 for every ray e.
inline IdealAnswer multiplier_ideal_via_resolution(const RationalCone& sigma, const QDivisor& delta,
                                                   const MonomialIdeal& a, const Rat& t) {
  detail::require_same_ambient(sigma, a);
  if (t.sign() <= 0) {
    throw PreconditionError("multiplier_ideal_via_resolution: t must be positive, got " + t.str());
  }
  if (a.empty()) throw PreconditionError("multiplier_ideal_via_resolution: empty ideal");
  PairWeight pw = pair_weight(sigma, delta);
  ResolutionResult res = resolve(log_resolution_fan(sigma, a));
  std::vector<LatticeHalfspace> hs;
  for (const auto& e : res.rays) {
    Rat c = pairing(pw.w, e) + t * Rat(ord_along_ray(e, a));
    hs.push_back({e, Integer(c.floor() + 1)});
  }
  LatticeRegion region(a.ambient(), std::move(hs));
  std::vector<LatticeVector> gens = minimal_generators(region);
  return {std::move(gens), pw.w, pw.r, std::move(region), std::nullopt, "resolution"};
}

}  // namespace toricideal
