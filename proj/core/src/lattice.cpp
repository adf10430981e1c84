#include "chowbundle/lattice.hpp"

#include <algorithm>
#include <functional>

#include "chowbundle/bundlecalc.hpp"
#include "chowbundle/errors.hpp"

namespace chowbundle {

IntegerMatrix hermite_normal_form(IntegerMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  mpz_class q;
  auto sub_multiple = [cols](std::vector<mpz_class>& target, const std::vector<mpz_class>& src,
                             const mpz_class& k) {
    for (std::size_t c = 0; c < cols; ++c) target[c] -= k * src[c];
  };

  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    bool has_pivot = false;
    while (true) {
      // Euclid on the column: move the smallest nonzero entry up, reduce the rest by it.
      std::size_t best = a.size();
      for (std::size_t i = row; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || mpz_cmpabs(a[i][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == a.size()) break;
      has_pivot = true;
      std::swap(a[row], a[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
        sub_multiple(a[i], a[row], q);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (a[row][col] < 0) {
      for (auto& x : a[row]) x = -x;
    }
    for (std::size_t i = 0; i < row; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      if (q != 0) sub_multiple(a[i], a[row], q);
    }
    ++row;
  }
  a.resize(row);
  return a;
}

// ---------------------------------------------------------------------------

GradedBasis::GradedBasis(RingPtr ring, unsigned degree) : ring_(std::move(ring)), degree_(degree) {
  std::vector<Monomial::Exponent> e(ring_->size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
    if (i == ring_->size()) {
      if (remaining == 0) monomials_.emplace_back(*ring_, e);
      return;
    }
    const unsigned w = ring_->weight(i);
    for (unsigned k = 0; k * w <= remaining; ++k) {
      e[i] = static_cast<Monomial::Exponent>(k);
      rec(i + 1, remaining - k * w);
    }
    e[i] = 0;
  };
  rec(0, degree_);
  std::sort(monomials_.begin(), monomials_.end(), CanonicalOrder{});
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalVector GradedBasis::coordinates(const GradedPolynomial& p) const {
  if (!same_ring(p.ring(), ring_)) throw StructuralError("polynomial is not in the basis ring");
  RationalVector v(monomials_.size(), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    auto i = index_of(m);
    if (!i) throw StructuralError("polynomial is not homogeneous of degree " + std::to_string(degree_));
    v[*i] = c;
  }
  return v;
}

GradedPolynomial GradedBasis::polynomial(std::span<const Rational> coords) const {
  if (coords.size() != monomials_.size()) throw StructuralError("coordinate vector has wrong length");
  GradedPolynomial p(ring_);
  for (std::size_t k = 0; k < coords.size(); ++k) p.add_term(monomials_[k], coords[k]);
  return p;
}

// ---------------------------------------------------------------------------

LatticeSpan::LatticeSpan(std::size_t dimension) : dim_(dimension) {}

LatticeSpan::LatticeSpan(std::size_t dimension, std::span<const RationalVector> vectors)
    : dim_(dimension) {
  for (const auto& v : vectors) {
    if (v.size() != dim_) throw StructuralError("lattice generator has wrong length");
    for (const auto& x : v) {
      mpz_class d = x.denominator();
      mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
    }
  }
  IntegerMatrix rows;
  for (const auto& v : vectors) {
    std::vector<mpz_class> row(dim_);
    bool nonzero = false;
    for (std::size_t c = 0; c < dim_; ++c) {
      row[c] = v[c].numerator() * (den_ / v[c].denominator());
      nonzero = nonzero || row[c] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  hnf_ = hermite_normal_form(std::move(rows));
  if (hnf_.empty()) den_ = 1;
}

std::vector<RationalVector> LatticeSpan::basis_vectors() const {
  std::vector<RationalVector> out;
  for (const auto& row : hnf_) {
    RationalVector v;
    v.reserve(dim_);
    for (const auto& x : row) v.emplace_back(x, den_);
    out.push_back(std::move(v));
  }
  return out;
}

bool LatticeSpan::contains(std::span<const Rational> v) const {
  if (v.size() != dim_) throw StructuralError("vector has wrong length for lattice");
  std::vector<mpz_class> x(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    mpq_class scaled = v[c].raw() * den_;
    scaled.canonicalize();
    if (scaled.get_den() != 1) return false;
    x[c] = scaled.get_num();
  }
  std::size_t col = 0;
  mpz_class q;
  for (const auto& row : hnf_) {
    std::size_t pivot = col;
    while (row[pivot] == 0) ++pivot;
    for (; col < pivot; ++col) {
      if (x[col] != 0) return false;
    }
    if (!mpz_divisible_p(x[pivot].get_mpz_t(), row[pivot].get_mpz_t())) return false;
    q = x[pivot] / row[pivot];
    for (std::size_t c = pivot; c < dim_; ++c) x[c] -= q * row[c];
    col = pivot + 1;
  }
  for (; col < dim_; ++col) {
    if (x[col] != 0) return false;
  }
  return true;
}

bool GradedLattice::contains(const GradedPolynomial& p) const {
  const auto v = basis->coordinates(p);
  return span.contains(v);
}

std::vector<GradedPolynomial> GradedLattice::generators() const {
  std::vector<GradedPolynomial> out;
  for (const auto& v : span.basis_vectors()) out.push_back(basis->polynomial(v));
  return out;
}

LatticeSpan span_from_vectors(std::span<const RationalVector> vectors, std::size_t dimension) {
  return LatticeSpan(dimension, vectors);
}

GradedLattice span_from_polynomials(const BasisPtr& basis, std::span<const GradedPolynomial> polys) {
  std::vector<RationalVector> vectors;
  vectors.reserve(polys.size());
  for (const auto& p : polys) vectors.push_back(basis->coordinates(p));
  return {basis, LatticeSpan(basis->size(), vectors)};
}

bool member(std::span<const Rational> v, const LatticeSpan& lattice) { return lattice.contains(v); }

namespace {

// Reduced row echelon form over Q; returns the nonzero rows and their pivot columns.
std::pair<std::vector<RationalVector>, std::vector<std::size_t>> rref(std::vector<RationalVector> rows,
                                                                      std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational k = rows[i][col];
      for (std::size_t c = 0; c < dim; ++c) rows[i][c] -= k * rows[r][c];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

bool member_mod_subspace(std::span<const Rational> v, const LatticeSpan& lattice,
                         std::span<const RationalVector> subspace) {
  const std::size_t dim = lattice.dimension();
  if (v.size() != dim) throw StructuralError("vector has wrong length for lattice");
  for (const auto& s : subspace) {
    if (s.size() != dim) throw StructuralError("subspace vector has wrong length");
  }
  auto [rows, pivots] = rref(std::vector<RationalVector>(subspace.begin(), subspace.end()), dim);

  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  // x ↦ x − Σ x[p_k]·row_k has kernel V; keep the non-pivot coordinates.
  auto project = [&](std::span<const Rational> x) {
    RationalVector y(x.begin(), x.end());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational coef = y[pivots[k]];
      if (coef.is_zero()) continue;
      for (std::size_t c = 0; c < dim; ++c) y[c] -= coef * rows[k][c];
    }
    RationalVector out;
    for (std::size_t c = 0; c < dim; ++c) {
      if (!is_pivot[c]) out.push_back(y[c]);
    }
    return out;
  };

  std::vector<RationalVector> projected;
  for (const auto& b : lattice.basis_vectors()) projected.push_back(project(b));
  const std::size_t quotient_dim = dim - pivots.size();
  return LatticeSpan(quotient_dim, projected).contains(project(v));
}

// ---------------------------------------------------------------------------

GradedLattice subring_graded_piece(const RingPtr& ring, std::span<const SubringGenerator> generators,
                                   unsigned n) {
  for (const auto& g : generators) {
    if (g.degree == 0) throw DomainError("subring generators must have positive degree");
    if (!same_ring(g.value.ring(), ring)) throw StructuralError("generator is not in the ring");
    if (!g.value.is_homogeneous(g.degree)) {
      throw DomainError("generator " + g.value.str() + " is not homogeneous of degree " +
                        std::to_string(g.degree));
    }
  }
  auto basis = std::make_shared<const GradedBasis>(ring, n);
  std::vector<RationalVector> vectors;
  // Multisets of generators with total degree n, as non-decreasing index sequences.
  std::function<void(std::size_t, unsigned, const GradedPolynomial&)> rec =
      [&](std::size_t first, unsigned remaining, const GradedPolynomial& product) {
        if (remaining == 0) {
          if (!product.is_zero()) vectors.push_back(basis->coordinates(product));
          return;
        }
        for (std::size_t k = first; k < generators.size(); ++k) {
          if (generators[k].degree > remaining) continue;
          rec(k, remaining - generators[k].degree, product * generators[k].value);
        }
      };
  rec(0, n, GradedPolynomial::constant(ring, 1));
  return {basis, LatticeSpan(basis->size(), vectors)};
}

GradedLattice product_lattice(const GradedLattice& a, const GradedLattice& b) {
  if (!same_ring(a.basis->ring(), b.basis->ring())) throw StructuralError("lattices in different rings");
  auto basis = std::make_shared<const GradedBasis>(a.basis->ring(), a.basis->degree() + b.basis->degree());
  std::vector<GradedPolynomial> products;
  const auto ga = a.generators();
  const auto gb = b.generators();
  for (const auto& x : ga) {
    for (const auto& y : gb) products.push_back(x * y);
  }
  return span_from_polynomials(basis, products);
}

GradedLattice dagger_chow_piece(unsigned r, long ell, unsigned n) {
  const RingPtr ring = dagger_ring(r);
  const TruncatedSeries F = capital_F(r, ell, n);
  const RingPtr& fring = F[0].ring();
  std::vector<SubringGenerator> gens;
  for (unsigned i = 1; i <= r; ++i) gens.push_back({GradedPolynomial::variable(fring, a_name(i)), i});
  for (unsigned i = 1; i <= n; ++i) {
    if (!F[i].is_zero()) gens.push_back({F[i], i});
  }
  return subring_graded_piece(fring, gens, n);
}

DistinguishReport b2_distinguish_report(long ell) {
  DistinguishReport report;
  report.ell = ell;
  report.degree = 4;
  std::vector<GradedLattice> pieces;
  for (unsigned k = 1; k <= 4; ++k) {
    pieces.push_back(dagger_chow_piece(2, ell, k));
    report.lattice_ranks["A" + std::to_string(k)] = pieces.back().rank();
  }
  const GradedPolynomial f4 = capital_F(2, ell, 4)[4];
  const GradedLattice a1a3 = product_lattice(pieces[0], pieces[2]);
  const GradedLattice a2a2 = product_lattice(pieces[1], pieces[1]);
  report.lattice_ranks["A1A3"] = a1a3.rank();
  report.lattice_ranks["A2A2"] = a2a2.rank();

  std::vector<GradedPolynomial> lower = a1a3.generators();
  for (auto& g : a2a2.generators()) lower.push_back(std::move(g));
  const GradedLattice decomposables = span_from_polynomials(a1a3.basis, lower);
  report.lattice_ranks["A1A3+A2A2"] = decomposables.rank();

  const auto f4_coords = a1a3.basis->coordinates(f4);
  report.f4_in_degree4 = pieces[3].contains(f4);
  report.membership_24f4 = a1a3.contains(f4 * Rational(24));
  report.nonmembership_f4 = !member_mod_subspace(f4_coords, decomposables.span, a1a3.span.basis_vectors());
  return report;
}

std::pair<DistinguishReport, DistinguishReport> b2_distinguish() {
  auto even = b2_distinguish_report(0);
  auto odd = b2_distinguish_report(1);
  if (!even.f4_in_degree4 || !odd.f4_in_degree4) {
    throw VerificationError("f4_in_degree4", "f_4 is not in the degree-4 piece of its own subring");
  }
  if (!even.membership_24f4) {
    throw VerificationError("b2_membership_24f4", "24 f_4 is not in A^1 * A^3 for ell = 0");
  }
  if (!odd.nonmembership_f4) {
    throw VerificationError("b2_nonmembership_f4",
                            "f_4 lies in A^1*A^3 + A^2*A^2 + Q(A^1*A^3) for ell = 1");
  }
  return {std::move(even), std::move(odd)};
}

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned k = 2; k * k <= q; ++k) {
    if (q % k == 0) return false;
  }
  return true;
}

NfgReport nfg_coefficient(unsigned q, long ell) {
  if (!is_prime(q)) throw DomainError("nfg_coefficient needs a prime q >= 2");
  const TruncatedSeries F = capital_F(2, ell, q);
  const RingPtr& ring = F[q].ring();
  NfgReport report;
  report.q = q;
  report.ell = ell;
  report.coefficient = F[q].coefficient(Monomial::variable(*ring, ring->index_of(a_prime_name(2)),
                                                           static_cast<Monomial::Exponent>(q)));
  report.ok = report.coefficient.abs() == Rational(mpz_class(1), factorial(q));
  if (!report.ok) {
    throw VerificationError("nfg_coefficient", "coefficient of (a2')^" + std::to_string(q) + " in f_" +
                                                   std::to_string(q) + " is " + report.coefficient.str());
  }
  return report;
}

nlohmann::json to_json(const DistinguishReport& report) {
  nlohmann::json ranks = nlohmann::json::object();
  for (const auto& [k, v] : report.lattice_ranks) ranks[k] = v;
  return {{"ell", report.ell},
          {"degree", report.degree},
          {"f4_in_degree4", report.f4_in_degree4},
          {"membership_24f4", report.membership_24f4},
          {"nonmembership_f4", report.nonmembership_f4},
          {"lattice_ranks", std::move(ranks)}};
}

nlohmann::json to_json(const NfgReport& report) {
  return {{"q", report.q},
          {"ell", report.ell},
          {"coefficient", report.coefficient.str()},
          {"sign", report.coefficient.sign()},
          {"ok", report.ok}};
}

}  // namespace chowbundle
