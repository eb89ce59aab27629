#pragma once

// Rational linear combinations of cosines of rational multiples of pi: exact rationality, and
// matching of short minimal relations against the Conway-Jones classification.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "su2k/arith/cyclotomic.hpp"

namespace su2k {

/// coeff * cos(angle * pi), angle rational.
struct CosineTerm {
  mpq_class coeff;
  mpq_class angle;
};

inline CycNumber cosine_sum(const std::vector<CosineTerm>& terms) {
  CycNumber sum(0L);
  for (const auto& t : terms) {
    mpq_class a = t.angle;
    a.canonicalize();
    sum += CycNumber(t.coeff) * CycNumber::cos_pi_fraction(a.get_num().get_si(), a.get_den().get_si());
  }
  return sum;
}

/// Exact value of sum c_i cos(a_i pi) if it is rational.
inline std::optional<mpq_class> conway_jones_is_rational(const std::vector<CosineTerm>& terms) {
  if (terms.size() > 10) throw DomainError("conway_jones_is_rational: at most 10 terms");
  return cosine_sum(terms).rational_value();
}

/// One entry of the classification: sum coeff_i cos(angle_i pi) = rhs.
struct ConwayJonesIdentity {
  std::string text;
  std::vector<CosineTerm> terms;
  mpq_class rhs;
};

/// The nine fixed identities (cos(pi/3) = 1/2 first). The one-parameter family
/// -cos(phi) + cos(pi/3 - phi) + cos(pi/3 + phi) = 0 is handled by conway_jones_family.
inline const std::vector<ConwayJonesIdentity>& conway_jones_list() {
  static const std::vector<ConwayJonesIdentity> list = [] {
    auto q = [](long a, long b) { return mpq_class(a, b); };
    std::vector<ConwayJonesIdentity> l;
    l.push_back({"cos(pi/3) = 1/2", {{1, q(1, 3)}}, q(1, 2)});
    l.push_back({"cos(pi/5) - cos(2pi/5) = 1/2", {{1, q(1, 5)}, {-1, q(2, 5)}}, q(1, 2)});
    l.push_back({"cos(pi/7) - cos(2pi/7) + cos(3pi/7) = 1/2", {{1, q(1, 7)}, {-1, q(2, 7)}, {1, q(3, 7)}}, q(1, 2)});
    l.push_back({"cos(pi/5) - cos(pi/15) + cos(4pi/15) = 1/2", {{1, q(1, 5)}, {-1, q(1, 15)}, {1, q(4, 15)}}, q(1, 2)});
    l.push_back({"-cos(2pi/5) + cos(2pi/15) - cos(7pi/15) = 1/2", {{-1, q(2, 5)}, {1, q(2, 15)}, {-1, q(7, 15)}}, q(1, 2)});
    l.push_back({"cos(pi/7) + cos(3pi/7) - cos(pi/21) + cos(8pi/21) = 1/2",
                 {{1, q(1, 7)}, {1, q(3, 7)}, {-1, q(1, 21)}, {1, q(8, 21)}}, q(1, 2)});
    l.push_back({"cos(pi/7) - cos(2pi/7) + cos(2pi/21) - cos(5pi/21) = 1/2",
                 {{1, q(1, 7)}, {-1, q(2, 7)}, {1, q(2, 21)}, {-1, q(5, 21)}}, q(1, 2)});
    l.push_back({"-cos(2pi/7) + cos(3pi/7) + cos(4pi/21) + cos(10pi/21) = 1/2",
                 {{-1, q(2, 7)}, {1, q(3, 7)}, {1, q(4, 21)}, {1, q(10, 21)}}, q(1, 2)});
    l.push_back({"-cos(pi/15) + cos(2pi/15) + cos(4pi/15) - cos(7pi/15) = 1/2",
                 {{-1, q(1, 15)}, {1, q(2, 15)}, {1, q(4, 15)}, {-1, q(7, 15)}}, q(1, 2)});
    return l;
  }();
  return list;
}

/// -cos(phi) + cos(pi/3 - phi) + cos(pi/3 + phi) = 0 for phi = angle * pi.
inline ConwayJonesIdentity conway_jones_family(const mpq_class& phi) {
  return {"-cos(phi) + cos(pi/3 - phi) + cos(pi/3 + phi) = 0, phi = " + phi.get_str() + "pi",
          {{-1, phi}, {1, mpq_class(1, 3) - phi}, {1, mpq_class(1, 3) + phi}},
          mpq_class(0)};
}

struct ListMatch {
  mpq_class value;
  /// No proper subset of the angles carries a rational relation.
  bool minimal = false;
  /// Text of the matched identity, or empty when the relation lies outside the list.
  std::string identity;
  bool in_list() const { return !identity.empty(); }
};

namespace detail {

/// Some nontrivial rational combination of the cosines of these angles is rational.
inline bool has_rational_relation(const std::vector<mpq_class>& angles) {
  std::vector<CycNumber> values{CycNumber(1L)};
  for (const auto& a : angles) values.push_back(CycNumber::cos_pi_fraction(a.get_num().get_si(), a.get_den().get_si()));
  const auto rel = rational_relation(values);
  if (!rel) return false;
  for (std::size_t i = 1; i < rel->size(); ++i)
    if ((*rel)[i] != 0) return true;
  return false;
}

/// terms * lambda == identity for a single rational lambda (angles matched as sets).
inline bool proportional(const std::vector<CosineTerm>& terms, const mpq_class& value, const ConwayJonesIdentity& id) {
  if (terms.size() != id.terms.size()) return false;
  std::optional<mpq_class> lambda;
  for (const auto& t : terms) {
    auto it = std::find_if(id.terms.begin(), id.terms.end(), [&](const CosineTerm& u) { return u.angle == t.angle; });
    if (it == id.terms.end()) return false;
    const mpq_class ratio = it->coeff / t.coeff;
    if (lambda && *lambda != ratio) return false;
    lambda = ratio;
  }
  return lambda && value * *lambda == id.rhs;
}

}  // namespace detail

/// List-matching mode: at most four terms with distinct angles strictly between 0 and pi/2 whose
/// combination is rational. Reports minimality and the matching list identity, if any.
inline std::optional<ListMatch> conway_jones_match(std::vector<CosineTerm> terms) {
  for (auto& t : terms) {
    t.coeff.canonicalize();
    t.angle.canonicalize();
  }
  if (terms.empty() || terms.size() > 4) throw DomainError("list matching needs 1 to 4 terms");
  std::vector<mpq_class> angles;
  for (const auto& t : terms) {
    if (t.angle <= 0 || t.angle >= mpq_class(1, 2)) throw DomainError("list matching needs angles strictly between 0 and pi/2");
    if (t.coeff == 0) throw DomainError("list matching needs nonzero coefficients");
    if (std::find(angles.begin(), angles.end(), t.angle) != angles.end()) throw DomainError("list matching needs distinct angles");
    angles.push_back(t.angle);
  }
  const auto value = conway_jones_is_rational(terms);
  if (!value) return std::nullopt;
  ListMatch out;
  out.value = *value;
  out.minimal = true;
  const std::size_t n = angles.size();
  for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
    std::vector<mpq_class> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) subset.push_back(angles[i]);
    if (detail::has_rational_relation(subset)) {
      out.minimal = false;
      break;
    }
  }
  for (const auto& id : conway_jones_list()) {
    if (detail::proportional(terms, *value, id)) {
      out.identity = id.text;
      return out;
    }
  }
  if (n == 3) {
    for (const auto& phi : angles) {
      if (phi >= mpq_class(1, 6)) continue;
      const auto family = conway_jones_family(phi);
      if (detail::proportional(terms, *value, family)) {
        out.identity = family.text;
        return out;
      }
    }
  }
  return out;
}

}  // namespace su2k
