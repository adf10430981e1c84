#include "chowbundle/bundlecalc.hpp"

#include <algorithm>
#include <string>

#include "chowbundle/errors.hpp"
#include "chowbundle/symfunc.hpp"

namespace chowbundle {

namespace {

GradedPolynomial var(const RingPtr& ring, const std::string& name) {
  return GradedPolynomial::variable(ring, name);
}

// a_i' with a_1' = ell.
GradedPolynomial a_prime(const RingPtr& ring, unsigned i, long ell) {
  if (i == 1) return GradedPolynomial::constant(ring, ell);
  return var(ring, a_prime_name(i));
}

}  // namespace

TruncatedSeries tautological_total_class(unsigned r, const RingPtr& ring, std::size_t order) {
  std::vector<GradedPolynomial> tail;
  for (unsigned i = 1; i <= r; ++i) tail.push_back(var(ring, a_name(i)));
  return unit_series(order, ring, tail);
}

TruncatedSeries capital_F(unsigned r, long ell, std::size_t order) {
  const RingPtr ring = dagger_ring(r);
  if (order == 0) return TruncatedSeries::constant(0, GradedPolynomial::constant(ring, 1));
  const std::size_t n = order - 1;  // the integrand is needed through t^{order-1}

  std::vector<GradedPolynomial> numerator(n + 1, GradedPolynomial::zero(ring));
  for (unsigned i = 1; i <= r && i - 1 <= n; ++i) numerator[i - 1] += var(ring, a_name(i)) * Rational(ell);
  for (unsigned i = 2; i <= r && i - 2 <= n; ++i) numerator[i - 2] -= var(ring, a_prime_name(i));

  const TruncatedSeries integrand =
      TruncatedSeries(n, std::move(numerator)) * tautological_total_class(r, ring, n).inverse();
  return integrand.integrate().exp();
}

TruncatedSeries pushforward_chern_mod_w(const BundleParams& p) {
  if (p.r == 0) throw DomainError("rank must be positive");
  if (p.ell < 0) throw DomainError("degree must be nonnegative");
  const auto order = std::min<std::size_t>(p.order, static_cast<std::size_t>(p.asserted_order()));
  const TruncatedSeries F = capital_F(p.r, p.ell, order);
  return F * tautological_total_class(p.r, F[0].ring(), order).pow(p.m + 1);
}

FiberedSeries fibered_total_chern(unsigned r, long ell, bool mod_w, std::size_t order) {
  const RingPtr ring = mod_w ? dagger_ring(r) : base_ring(r);
  std::vector<FiberedClass> coeffs;
  coeffs.push_back(FiberedClass::from_base(GradedPolynomial::constant(ring, 1), mod_w));
  for (std::size_t i = 1; i <= order; ++i) {
    if (i <= r) {
      const auto k = static_cast<unsigned>(i);
      coeffs.emplace_back(var(ring, a_name(k)), a_prime(ring, k, ell), mod_w);
    } else {
      coeffs.push_back(coeffs.front().zero_like());
    }
  }
  return FiberedSeries(order, std::move(coeffs));
}

std::vector<Rational> todd_coefficients(std::size_t order) {
  // (1 − e^{−x})/x = Σ_k (−1)^k x^k/(k+1)!, inverted term by term.
  std::vector<Rational> g;
  for (std::size_t k = 0; k <= order; ++k) {
    Rational v(mpz_class(1), factorial(static_cast<unsigned>(k + 1)));
    g.push_back(k % 2 == 0 ? v : -v);
  }
  std::vector<Rational> td{1};
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += g[k] * td[n - k];
    td.push_back(-acc);
  }
  return td;
}

std::vector<GradedPolynomial> pushforward_character_full(const BundleParams& p) {
  if (p.r == 0) throw DomainError("rank must be positive");
  if (p.ell < 0) throw DomainError("degree must be nonnegative");
  const std::size_t top = p.order + 1;  // degree on the total space
  const FiberedSeries chern = fibered_total_chern(p.r, p.ell, /*mod_w=*/false, top);
  const FiberedClass one = chern[0];
  const RingPtr& ring = one.ring();
  const FiberedClass z = FiberedClass::z(ring, false);

  std::vector<FiberedClass> ch{one * Rational(static_cast<long>(p.r))};
  for (auto& c : chern_to_char(chern)) ch.push_back(std::move(c));
  const FiberedSeries ch_e(top, std::move(ch));

  // ch(O(m)) = exp(m·z t)
  std::vector<FiberedClass> mz(top + 1, one.zero_like());
  mz[1] = z * Rational(static_cast<long>(p.m));
  const FiberedSeries ch_twist = FiberedSeries(top, std::move(mz)).exp();

  // td(T_π) with c_1(T_π) = 2z + w1.
  const FiberedClass x = z * Rational(2) + FiberedClass::from_base(var(ring, "w1"), false);
  const auto td_coeffs = todd_coefficients(top);
  std::vector<FiberedClass> td;
  FiberedClass x_pow = one;
  for (std::size_t k = 0; k <= top; ++k) {
    td.push_back(x_pow * td_coeffs[k]);
    x_pow = x_pow * x;
  }
  const FiberedSeries integrand = ch_e * ch_twist * FiberedSeries(top, std::move(td));

  std::vector<GradedPolynomial> out;
  for (std::size_t k = 0; k <= p.order; ++k) out.push_back(integrand[k + 1].pushforward());
  return out;
}

TruncatedSeries pushforward_chern_full(const BundleParams& p) {
  if (p.ell < 0) throw DomainError("degree must be nonnegative");
  if (static_cast<long>(p.order) > p.asserted_order()) {
    throw DomainError("order " + std::to_string(p.order) + " exceeds m*r + ell = " +
                      std::to_string(p.asserted_order()));
  }
  const auto ch = pushforward_character_full(p);
  const RingPtr& ring = ch.front().ring();
  if (ch.front() != GradedPolynomial::constant(ring, Rational(p.pushforward_rank()))) {
    throw VerificationError("grr_rank", "ch_0 = " + ch.front().str() + ", expected (m+1)r + ell = " +
                                            std::to_string(p.pushforward_rank()));
  }
  return char_to_chern(ring, std::span(ch).subspan(1), p.order);
}

TruncatedSeries pushforward_chern(const BundleParams& p) {
  return p.mod_w ? pushforward_chern_mod_w(p) : pushforward_chern_full(p);
}

std::vector<GradedPolynomial> twist_images(const RingPtr& ring, unsigned r, long ell) {
  const bool mod_w = !ring->find("w1").has_value();
  const RingPtr own = mod_w ? dagger_ring(r) : base_ring(r);
  if (!same_ring(ring, own)) {
    throw StructuralError("twist_substitute needs dagger_ring(r) or base_ring(r)");
  }
  // c(E(1)) = Σ_k c_k(E) t^k (1 + z t)^{r−k}
  const FiberedSeries chern = fibered_total_chern(r, ell, mod_w, r);
  const FiberedClass one = chern[0];
  std::vector<FiberedClass> lin(r + 1, one.zero_like());
  lin[0] = one;
  if (r >= 1) lin[1] = FiberedClass::z(ring, mod_w);
  const FiberedSeries one_plus_zt(r, std::move(lin));

  FiberedSeries twisted = FiberedSeries::constant(r, one.zero_like());
  for (unsigned k = 0; k <= r; ++k) {
    std::vector<FiberedClass> shifted(r + 1, one.zero_like());
    shifted[k] = chern[k];
    twisted = twisted + FiberedSeries(r, std::move(shifted)) * one_plus_zt.pow(r - k);
  }

  std::vector<GradedPolynomial> images;
  for (const auto& v : ring->variables()) {
    if (v.name == "w1" || v.name == "w2") {
      images.push_back(var(ring, v.name));
      continue;
    }
    const bool primed = v.name.back() == '\'';
    const unsigned i = static_cast<unsigned>(std::stoul(v.name.substr(1)));
    images.push_back(primed ? twisted[i].fiber() : twisted[i].base());
  }
  if (twisted[1].fiber() != GradedPolynomial::constant(ring, ell + static_cast<long>(r))) {
    throw VerificationError("twist_degree_shift", "a_1' of E(1) is not ell + r");
  }
  return images;
}

GradedPolynomial twist_substitute(const GradedPolynomial& p, unsigned r, long ell) {
  const auto images = twist_images(p.ring(), r, ell);
  return p.substitute(p.ring(), images);
}

}  // namespace chowbundle
