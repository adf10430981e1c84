#include "chowbundle/ring.hpp"

#include <set>

#include "chowbundle/errors.hpp"

namespace chowbundle {

RingSpec::RingSpec(std::vector<Variable> variables) : vars_(std::move(variables)) {
  std::set<std::string_view> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw StructuralError("empty variable name");
    if (v.weight == 0) throw StructuralError("variable " + v.name + " has weight 0");
    if (!seen.insert(v.name).second) {
      throw StructuralError("duplicate variable name " + v.name);
    }
  }
}

std::optional<std::size_t> RingSpec::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t RingSpec::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("ring has no variable named " + std::string(name));
}

RingPtr make_ring(std::vector<Variable> variables) {
  return std::make_shared<const RingSpec>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string a_name(unsigned i) { return "a" + std::to_string(i); }
std::string a_prime_name(unsigned i) { return "a" + std::to_string(i) + "'"; }

namespace {

void push_tautological(std::vector<Variable>& vars, unsigned r) {
  for (unsigned i = 1; i <= r; ++i) vars.push_back({a_name(i), i});
  for (unsigned i = 2; i <= r; ++i) vars.push_back({a_prime_name(i), i - 1});
}

}  // namespace

RingPtr base_ring(unsigned r) {
  if (r == 0) throw DomainError("rank must be positive");
  std::vector<Variable> vars{{"w1", 1}, {"w2", 2}};
  push_tautological(vars, r);
  return make_ring(std::move(vars));
}

RingPtr dagger_ring(unsigned r) {
  if (r == 0) throw DomainError("rank must be positive");
  std::vector<Variable> vars;
  push_tautological(vars, r);
  return make_ring(std::move(vars));
}

RingPtr relations_ring(unsigned r, unsigned d) {
  std::vector<Variable> vars{{"w1", 1}, {"w2", 2}};
  for (unsigned i = 1; i <= d; ++i) vars.push_back({"t" + std::to_string(i), i});
  for (unsigned i = 1; i <= r + d; ++i) vars.push_back({"u" + std::to_string(i), i});
  return make_ring(std::move(vars));
}

RingPtr symmetric_ring(unsigned r) {
  std::vector<Variable> vars;
  for (unsigned i = 1; i <= r; ++i) vars.push_back({"x" + std::to_string(i), i});
  return make_ring(std::move(vars));
}

Monomial::Monomial(const RingSpec& ring, std::vector<Exponent> exponents)
    : exps_(std::move(exponents)) {
  if (exps_.size() != ring.size()) {
    throw StructuralError("exponent vector length does not match ring");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += exps_[i] * ring.weight(i);
}

Monomial Monomial::one(const RingSpec& ring) {
  return Monomial(ring, std::vector<Exponent>(ring.size(), 0));
}

Monomial Monomial::variable(const RingSpec& ring, std::size_t index, Exponent power) {
  std::vector<Exponent> e(ring.size(), 0);
  e.at(index) = power;
  return Monomial(ring, std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] + b.exps_[i]);
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial Monomial::lowered(std::size_t i, unsigned weight) const {
  Monomial out = *this;
  --out.exps_[i];
  out.degree_ -= weight;
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace chowbundle
