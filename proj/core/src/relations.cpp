#include "chowbundle/relations.hpp"

#include <functional>
#include <string>

#include "chowbundle/errors.hpp"

namespace chowbundle {

BiProjElement::BiProjElement(unsigned r, unsigned d)
    : r_(r), d_(d), ring_(relations_ring(r, d)) {
  if (d == 0) throw DomainError("the projective bundle needs d >= 1");
  table_.assign(2 * d, GradedPolynomial::zero(ring_));
}

BiProjElement BiProjElement::one(unsigned r, unsigned d) {
  BiProjElement e(r, d);
  e.at(0, 0) = GradedPolynomial::constant(e.ring_, 1);
  return e;
}

BiProjElement BiProjElement::monomial(unsigned r, unsigned d, unsigned z_power,
                                      unsigned zeta_power, const GradedPolynomial& c) {
  BiProjElement e = one(r, d);
  for (unsigned k = 0; k < z_power; ++k) e = e.times_z();
  for (unsigned k = 0; k < zeta_power; ++k) e = e.times_zeta();
  return e * c.embed(e.ring_);
}

const GradedPolynomial& BiProjElement::coefficient(unsigned a, unsigned b) const {
  if (a > 1 || b >= d_) throw StructuralError("normal-form index out of range");
  return table_[a * d_ + b];
}

BiProjElement BiProjElement::times_z() const {
  BiProjElement out(*this);
  const auto w1 = GradedPolynomial::variable(ring_, "w1");
  const auto w2 = GradedPolynomial::variable(ring_, "w2");
  for (unsigned b = 0; b < d_; ++b) {
    const GradedPolynomial& p = coefficient(0, b);
    const GradedPolynomial& q = coefficient(1, b);
    // (p + q z) z = p z + q(−w1 z − w2)
    out.at(0, b) = -(q * w2);
    out.at(1, b) = p - q * w1;
  }
  return out;
}

BiProjElement BiProjElement::times_zeta() const {
  BiProjElement out(r_, d_);
  for (unsigned a = 0; a <= 1; ++a) {
    for (unsigned b = 0; b + 1 < d_; ++b) out.at(a, b + 1) = coefficient(a, b);
    const GradedPolynomial& top = coefficient(a, d_ - 1);
    if (top.is_zero()) continue;
    // ζ^d = −(t_1 ζ^{d−1} + ... + t_d)
    for (unsigned k = 1; k <= d_; ++k) {
      out.at(a, d_ - k) -= top * GradedPolynomial::variable(ring_, "t" + std::to_string(k));
    }
  }
  return out;
}

namespace {

void require_same(const BiProjElement& x, const BiProjElement& y) {
  if (x.r() != y.r() || x.d() != y.d()) throw StructuralError("elements of different bi-projective rings");
}

}  // namespace

BiProjElement operator+(const BiProjElement& x, const BiProjElement& y) {
  require_same(x, y);
  BiProjElement out = x;
  for (std::size_t k = 0; k < out.table_.size(); ++k) out.table_[k] += y.table_[k];
  return out;
}

BiProjElement operator-(const BiProjElement& x, const BiProjElement& y) {
  require_same(x, y);
  BiProjElement out = x;
  for (std::size_t k = 0; k < out.table_.size(); ++k) out.table_[k] -= y.table_[k];
  return out;
}

BiProjElement operator*(const BiProjElement& x, const GradedPolynomial& c) {
  BiProjElement out = x;
  for (auto& g : out.table_) g *= c;
  return out;
}

BiProjElement operator*(const BiProjElement& x, const BiProjElement& y) {
  require_same(x, y);
  BiProjElement out(x.r_, x.d_);
  BiProjElement shifted = x;  // x · ζ^b
  for (unsigned b = 0; b < x.d_; ++b) {
    if (b > 0) shifted = shifted.times_zeta();
    const auto& c0 = y.coefficient(0, b);
    const auto& c1 = y.coefficient(1, b);
    if (!c0.is_zero()) out = out + shifted * c0;
    if (!c1.is_zero()) out = out + shifted.times_z() * c1;
  }
  return out;
}

bool BiProjElement::is_homogeneous(unsigned degree) const {
  for (unsigned a = 0; a <= 1; ++a) {
    for (unsigned b = 0; b < d_; ++b) {
      const auto& g = coefficient(a, b);
      if (g.is_zero()) continue;
      if (a + b > degree || !g.is_homogeneous(degree - a - b)) return false;
    }
  }
  return true;
}

BiProjElement reduce(unsigned r, unsigned d, std::span<const BiProjTerm> expr) {
  BiProjElement out(r, d);
  for (const auto& term : expr) {
    out = out + BiProjElement::monomial(r, d, term.z_power, term.zeta_power, term.coefficient);
  }
  return out;
}

BiProjElement beta_class(unsigned r, unsigned d) {
  if (r == 0) throw DomainError("rank must be positive");
  const unsigned n = r + d;
  std::vector<BiProjElement> powers{BiProjElement::one(r, d)};  // (ζ + z)^k
  for (unsigned k = 1; k <= n; ++k) {
    powers.push_back(powers.back().times_zeta() + powers.back().times_z());
  }
  BiProjElement beta = powers[n];
  for (unsigned i = 1; i <= n; ++i) {
    beta = beta + powers[n - i] * GradedPolynomial::variable(beta.ring(), "u" + std::to_string(i));
  }
  return beta;
}

GradedPolynomial sigma_pushforward(const BiProjElement& el) { return el.coefficient(1, el.d() - 1); }

GradedPolynomial closed_pushforward(long i, unsigned r, unsigned d) {
  const RingPtr ring = relations_ring(r, d);
  GradedPolynomial out(ring);
  if (i < 0) return out;
  if (i == 0) return GradedPolynomial::constant(ring, 1);

  std::vector<Monomial::Exponent> m(ring->size(), 0);
  const std::size_t t_offset = ring->index_of("t1");
  // Enumerate (m_1..m_d) with Σ k·m_k = i.
  std::function<void(unsigned, long)> rec = [&](unsigned k, long remaining) {
    if (k == 0) {
      if (remaining != 0) return;
      unsigned parts = 0;
      mpz_class denom = 1;
      for (unsigned j = 1; j <= d; ++j) {
        const unsigned mj = m[t_offset + j - 1];
        parts += mj;
        denom *= factorial(mj);
      }
      mpz_class count = factorial(parts) / denom;
      if (parts % 2 == 1) count = -count;
      out.add_term(Monomial(*ring, m), Rational(count));
      return;
    }
    for (long mk = 0; mk * static_cast<long>(k) <= remaining; ++mk) {
      m[t_offset + k - 1] = static_cast<Monomial::Exponent>(mk);
      rec(k - 1, remaining - mk * static_cast<long>(k));
    }
    m[t_offset + k - 1] = 0;
  };
  rec(d, i);
  return out;
}

GradedPolynomial f_class(unsigned i, unsigned j, unsigned r, unsigned d) {
  if (i > 1 || j >= d) throw DomainError("f_{i,j} needs i in {0,1} and 0 <= j <= d-1");
  BiProjElement el = beta_class(r, d);
  if (i == 1) el = el.times_z();
  for (unsigned k = 0; k < j; ++k) el = el.times_zeta();
  return sigma_pushforward(el);
}

LeadingPart leading_part(const GradedPolynomial& f, unsigned degree) {
  const auto& ring = *f.ring();
  LeadingPart out;
  out.degree = degree;
  if (auto t = ring.find("t" + std::to_string(degree))) {
    out.has_t = true;
    out.t_coefficient = f.coefficient(Monomial::variable(ring, *t));
  }
  if (auto u = ring.find("u" + std::to_string(degree))) {
    out.u_coefficient = f.coefficient(Monomial::variable(ring, *u));
  }
  return out;
}

}  // namespace chowbundle
