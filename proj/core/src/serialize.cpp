#include "chowbundle/serialize.hpp"

#include <limits>
#include <string>

#include "chowbundle/errors.hpp"

namespace chowbundle {

using nlohmann::json;

json to_json(const GradedPolynomial& p) {
  json terms = json::array();
  const auto& ring = *p.ring();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) mono[ring.variable(i).name] = m[i];
    }
    terms.push_back({{"m", std::move(mono)},
                     {"n", c.numerator().get_str()},
                     {"d", c.denominator().get_str()}});
  }
  return terms;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

GradedPolynomial polynomial_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) throw StructuralError("polynomial JSON must be an array of terms");
  GradedPolynomial p(ring);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("m") || !term.contains("n") || !term.contains("d")) {
      throw StructuralError("polynomial term needs \"m\", \"n\" and \"d\"");
    }
    const auto& mono = term.at("m");
    if (!mono.is_object()) throw StructuralError("monomial must be an object");
    std::vector<Monomial::Exponent> e(ring->size(), 0);
    for (const auto& [name, exponent] : mono.items()) {
      if (!exponent.is_number_unsigned() ||
          exponent.get<unsigned long>() > std::numeric_limits<Monomial::Exponent>::max()) {
        throw StructuralError("exponent of " + name + " must be a small nonnegative integer");
      }
      e[ring->index_of(name)] = static_cast<Monomial::Exponent>(exponent.get<unsigned long>());
    }
    if (!term.at("n").is_string() || !term.at("d").is_string()) {
      throw StructuralError("numerator and denominator must be decimal strings");
    }
    p.add_term(Monomial(*ring, std::move(e)),
               Rational::parse(term.at("n").get<std::string>(), term.at("d").get<std::string>()));
  }
  return p;
}

TruncatedSeries series_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw StructuralError("series JSON needs \"order\" and \"coeffs\"");
  }
  const auto order = j.at("order").get<std::size_t>();
  std::vector<GradedPolynomial> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(polynomial_from_json(ring, c));
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace chowbundle
