#include "chowbundle/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include "chowbundle/errors.hpp"

namespace chowbundle {

GradedPolynomial::GradedPolynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("polynomial without a ring");
}

GradedPolynomial GradedPolynomial::constant(RingPtr ring, const Rational& c) {
  GradedPolynomial p(std::move(ring));
  p.add_term(Monomial::one(*p.ring_), c);
  return p;
}

GradedPolynomial GradedPolynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

GradedPolynomial GradedPolynomial::variable(RingPtr ring, std::size_t index) {
  GradedPolynomial p(std::move(ring));
  p.add_term(Monomial::variable(*p.ring_, index), 1);
  return p;
}

GradedPolynomial GradedPolynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  GradedPolynomial p(std::move(ring));
  if (m.size() != p.ring_->size()) throw StructuralError("monomial does not belong to ring");
  p.add_term(m, c);
  return p;
}

bool GradedPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool GradedPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational GradedPolynomial::constant_term() const {
  if (terms_.empty() || !terms_.begin()->first.is_one()) return 0;
  return terms_.begin()->second;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPolynomial::require_same_ring(const GradedPolynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw StructuralError("polynomials belong to different rings");
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  a.require_same_ring(b);
  GradedPolynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a : b;
    const auto& other = a.size() == 1 ? b : a;
    const auto& [sm, sc] = *single.terms_.begin();
    // Multiplying by a single term is injective on monomials, so the order is
    // preserved and no coefficient can cancel.
    auto hint = out.terms_.end();
    for (const auto& [m, c] : other.terms_) hint = out.terms_.emplace_hint(hint, m * sm, c * sc);
    return out;
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca.raw() * cb.raw();
  }
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.terms_.emplace(m, Rational(c));
  }
  return out;
}

GradedPolynomial& GradedPolynomial::operator*=(const GradedPolynomial& o) {
  *this = *this * o;
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedPolynomial GradedPolynomial::pow(unsigned k) const {
  GradedPolynomial result = one_like();
  GradedPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

bool GradedPolynomial::is_homogeneous(unsigned degree) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != degree) return false;
  }
  return true;
}

GradedPolynomial GradedPolynomial::homogeneous_part(unsigned degree) const {
  GradedPolynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPolynomial GradedPolynomial::derivative(std::size_t index) const {
  if (index >= ring_->size()) throw StructuralError("derivative variable out of range");
  GradedPolynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    const auto e = m[index];
    if (e == 0) continue;
    out.add_term(m.lowered(index, ring_->weight(index)), c * Rational(static_cast<long>(e)));
  }
  return out;
}

GradedPolynomial GradedPolynomial::derivative(std::string_view name) const {
  return derivative(ring_->index_of(name));
}

GradedPolynomial GradedPolynomial::substitute(const RingPtr& target,
                                              std::span<const GradedPolynomial> images) const {
  if (images.size() != ring_->size()) {
    throw StructuralError("substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw StructuralError("substitution image in wrong ring");
  }
  // Powers of each image are reused across terms.
  std::vector<std::vector<GradedPolynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const GradedPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedPolynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  GradedPolynomial out(target);
  for (const auto& [m, c] : terms_) {
    GradedPolynomial t = GradedPolynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

GradedPolynomial GradedPolynomial::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    GradedPolynomial out = *this;
    out.ring_ = target;
    return out;
  }
  std::vector<std::optional<std::size_t>> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    map[i] = target->find(ring_->variable(i).name);
    if (map[i] && target->weight(*map[i]) != ring_->weight(i)) {
      throw StructuralError("variable " + ring_->variable(i).name + " has a different weight in target ring");
    }
  }
  GradedPolynomial out(target);
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) {
        throw StructuralError("variable " + ring_->variable(i).name + " does not exist in target ring");
      }
      e[*map[i]] = m[i];
    }
    out.add_term(Monomial(*target, std::move(e)), c);
  }
  return out;
}

Rational GradedPolynomial::specialize(
    const std::map<std::string, Rational, std::less<>>& assignment) const {
  std::vector<const Rational*> values(ring_->size(), nullptr);
  for (const auto& [name, value] : assignment) values[ring_->index_of(name)] = &value;
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c.raw();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (values[i] == nullptr) {
        throw StructuralError("no value assigned to variable " + ring_->variable(i).name);
      }
      for (unsigned k = 0; k < m[i]; ++k) t *= values[i]->raw();
    }
    total += t;
  }
  return Rational(total);
}

std::string monomial_str(const RingSpec& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable(i).name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << monomial_str(*ring_, m);
    }
  }
  return os.str();
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const GradedPolynomial& p) { return os << p.str(); }

}  // namespace chowbundle
