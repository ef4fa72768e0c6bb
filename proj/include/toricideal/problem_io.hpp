#pragma once

/**
 * @file problem_io.hpp
 * @brief JSON problem files: a cone, an optional boundary divisor, an
 *        optional monomial ideal and an optional exponent.
 *
 *   {
 *     "rank": 2,
 *     "cone_rays": [[1,-1],[0,1]],
 *     "delta": ["0/1","0/1"],      // one coefficient per ray, in file order
 *     "ideal": [[5,1],[4,3]],
 *     "t": "1/1"
 *   }
 *
 * Rationals are strings "p/q" (or "p"); plain JSON integers are also
 * accepted for delta. Non-primitive rays are divided by their content with
 * a warning.
 */

#include "toricideal/divisors.hpp"
#include "toricideal/errors.hpp"
#include "toricideal/newton.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricideal {

struct ProblemFile {
  std::size_t rank = 0;
  std::vector<LatticeVector> cone_rays;
  std::optional<std::vector<Rat>> delta;
  std::optional<std::vector<LatticeVector>> ideal;
  std::optional<Rat> t;
  std::vector<std::string> warnings;  // not part of the problem's identity

  friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
    return a.rank == b.rank && a.cone_rays == b.cone_rays && a.delta == b.delta &&
           a.ideal == b.ideal && a.t == b.t;
  }

  RationalCone sigma() const { return RationalCone(rank, cone_rays); }

  /// Delta re-indexed to the lexicographic ray order of sigma(); zero when absent.
  QDivisor divisor() const {
    RationalCone s = sigma();
    if (!delta) return QDivisor::zero(s);
    std::vector<Rat> coeffs(s.rays().size());
    for (std::size_t i = 0; i < cone_rays.size(); ++i) {
      auto it = std::find(s.rays().begin(), s.rays().end(), cone_rays[i]);
      coeffs[it - s.rays().begin()] = (*delta)[i];
    }
    return QDivisor(s, std::move(coeffs));
  }

  MonomialIdeal monomial_ideal() const {
    if (!ideal) throw InputError("field 'ideal' is required for this command");
    try {
      return MonomialIdeal(dual_cone(sigma()), *ideal);
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("field 'ideal': ") + e.what());
    }
  }
};

namespace detail {

using nlohmann::json;

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Integer json_integer(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

inline LatticeVector json_vector(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array, got " + j.dump());
  if (j.size() != rank) {
    throw InputError(where + ": vector " + j.dump() + " has length " + std::to_string(j.size()) +
                     ", expected rank " + std::to_string(rank));
  }
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = json_integer(j[i], where);
  return v;
}

inline Rat json_rational(const json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(json_integer(j, where));
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a rational string \"p/q\", got " + j.dump());
}

inline json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (fits_int64(x)) a.push_back(to_int64(x));
    else a.push_back(x.get_str());
  }
  return a;
}

}  // namespace detail

/// Throws InputError naming the field and the violated constraint; syntax
/// errors carry a line and column.
inline ProblemFile parse_problem(const std::string& text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError("syntax error at " + detail::line_column(text, at) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  static const std::set<std::string> known{"rank", "cone_rays", "delta", "ideal", "t"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw InputError("unknown field '" + key + "'");
  }

  ProblemFile p;
  if (!j.contains("rank")) throw InputError("missing field 'rank'");
  Integer rank = detail::json_integer(j["rank"], "field 'rank'");
  if (rank < 1 || rank > 16) throw InputError("field 'rank': must be between 1 and 16");
  p.rank = to_int64(rank);

  if (!j.contains("cone_rays") || !j["cone_rays"].is_array() || j["cone_rays"].empty()) {
    throw InputError("field 'cone_rays': expected a nonempty array of vectors");
  }
  for (std::size_t i = 0; i < j["cone_rays"].size(); ++i) {
    std::string where = "field 'cone_rays'[" + std::to_string(i) + "]";
    LatticeVector v = detail::json_vector(j["cone_rays"][i], p.rank, where);
    if (v.is_zero()) throw InputError(where + ": ray is zero");
    LatticeVector pv = primitive(v);
    if (pv != v) {
      p.warnings.push_back(where + ": ray " + v.str() + " is not primitive, using " + pv.str());
    }
    if (std::find(p.cone_rays.begin(), p.cone_rays.end(), pv) != p.cone_rays.end()) {
      throw InputError(where + ": duplicate ray " + pv.str());
    }
    p.cone_rays.push_back(pv);
  }
  RationalCone s = p.sigma();
  if (s.is_strongly_convex()) {
    for (std::size_t i = 0; i < p.cone_rays.size(); ++i) {
      if (std::find(s.rays().begin(), s.rays().end(), p.cone_rays[i]) == s.rays().end()) {
        throw InputError("field 'cone_rays'[" + std::to_string(i) + "]: " + p.cone_rays[i].str() +
                         " is not an extremal ray of the cone");
      }
    }
  }

  if (j.contains("delta") && !j["delta"].is_null()) {
    const json& d = j["delta"];
    if (!d.is_array() || d.size() != p.cone_rays.size()) {
      throw InputError("field 'delta': expected " + std::to_string(p.cone_rays.size()) +
                       " coefficients, one per ray");
    }
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < d.size(); ++i)
      coeffs.push_back(detail::json_rational(d[i], "field 'delta'[" + std::to_string(i) + "]"));
    p.delta = std::move(coeffs);
  }

  if (j.contains("ideal") && !j["ideal"].is_null()) {
    const json& a = j["ideal"];
    if (!a.is_array()) throw InputError("field 'ideal': expected an array of exponent vectors");
    std::vector<LatticeVector> exps;
    for (std::size_t i = 0; i < a.size(); ++i)
      exps.push_back(detail::json_vector(a[i], p.rank, "field 'ideal'[" + std::to_string(i) + "]"));
    p.ideal = std::move(exps);
    if (s.is_strongly_convex() && s.is_full_dimensional()) p.monomial_ideal();
  }

  if (j.contains("t") && !j["t"].is_null()) p.t = detail::json_rational(j["t"], "field 't'");
  return p;
}

inline std::string render_problem(const ProblemFile& p) {
  using detail::json;
  nlohmann::ordered_json j;
  j["rank"] = p.rank;
  json rays = json::array();
  for (const auto& r : p.cone_rays) rays.push_back(detail::vector_json(r));
  j["cone_rays"] = rays;
  if (p.delta) {
    json d = json::array();
    for (const auto& c : *p.delta) d.push_back(c.str());
    j["delta"] = d;
  }
  if (p.ideal) {
    json a = json::array();
    for (const auto& e : *p.ideal) a.push_back(detail::vector_json(e));
    j["ideal"] = a;
  }
  if (p.t) j["t"] = p.t->str();
  return j.dump(2) + "\n";
}

}  // namespace toricideal
