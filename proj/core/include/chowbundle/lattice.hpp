#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "chowbundle/polynomial.hpp"

namespace chowbundle {

using RationalVector = std::vector<Rational>;
using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Row Hermite normal form: echelon rows with positive pivots, entries above
/// each pivot reduced into [0, pivot), zero rows removed.
IntegerMatrix hermite_normal_form(IntegerMatrix rows);

/// All monomials of weighted degree n, in canonical order; coordinatizes
/// homogeneous degree-n polynomials.
class GradedBasis {
 public:
  GradedBasis(RingPtr ring, unsigned degree);

  const RingPtr& ring() const noexcept { return ring_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Throws StructuralError unless p lives in this ring and is homogeneous of this degree.
  RationalVector coordinates(const GradedPolynomial& p) const;
  GradedPolynomial polynomial(std::span<const Rational> coords) const;

 private:
  RingPtr ring_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, CanonicalOrder> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

/// Integer span of rational vectors, stored canonically as (HNF of D·vectors, D)
/// where D is the least common denominator of the generating coordinates.
class LatticeSpan {
 public:
  /// The zero lattice in Q^dimension.
  explicit LatticeSpan(std::size_t dimension);
  LatticeSpan(std::size_t dimension, std::span<const RationalVector> vectors);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return hnf_.size(); }
  const IntegerMatrix& hnf() const noexcept { return hnf_; }
  const mpz_class& denominator() const noexcept { return den_; }

  /// HNF rows divided by D: a Z-basis of the lattice.
  std::vector<RationalVector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;

  friend bool operator==(const LatticeSpan& a, const LatticeSpan& b) {
    return a.dim_ == b.dim_ && a.den_ == b.den_ && a.hnf_ == b.hnf_;
  }

 private:
  std::size_t dim_;
  IntegerMatrix hnf_;
  mpz_class den_ = 1;
};

/// A lattice inside a graded piece of a polynomial ring.
struct GradedLattice {
  BasisPtr basis;
  LatticeSpan span;

  std::size_t rank() const { return span.rank(); }
  bool contains(const GradedPolynomial& p) const;
  /// Z-basis of the lattice as polynomials.
  std::vector<GradedPolynomial> generators() const;
};

LatticeSpan span_from_vectors(std::span<const RationalVector> vectors, std::size_t dimension);
GradedLattice span_from_polynomials(const BasisPtr& basis, std::span<const GradedPolynomial> polys);

bool member(std::span<const Rational> v, const LatticeSpan& lattice);

/// Decides v ∈ L + V for the Q-span V of `subspace`: both sides are projected
/// onto coordinates complementary to V and tested for lattice membership.
bool member_mod_subspace(std::span<const Rational> v, const LatticeSpan& lattice,
                         std::span<const RationalVector> subspace);

struct SubringGenerator {
  GradedPolynomial value;
  unsigned degree;
};

/// Degree-n piece of the subring generated by `generators`: the integer span of
/// all products of generators of total degree n.
GradedLattice subring_graded_piece(const RingPtr& ring, std::span<const SubringGenerator> generators,
                                   unsigned n);

/// Integer span of all products x·y with x in `a`, y in `b`.
GradedLattice product_lattice(const GradedLattice& a, const GradedLattice& b);

/// Degree-n piece of the subring of Q[a_1..a_r, a_2'..a_r'] generated by
/// a_1..a_r and f_1..f_n, the coefficients of capital_F(r, ell, n).
GradedLattice dagger_chow_piece(unsigned r, long ell, unsigned n);

struct DistinguishReport {
  long ell = 0;
  unsigned degree = 4;
  bool f4_in_degree4 = false;      // sanity: f_4 lies in its own graded piece
  bool membership_24f4 = false;    // 24 f_4 ∈ A¹·A³
  bool nonmembership_f4 = false;   // f_4 ∉ (A¹·A³ + A²·A²) + Q·(A¹·A³)
  std::map<std::string, std::size_t> lattice_ranks;
};

/// Computes the degree-4 comparison for B†_{2,ell} without asserting anything.
DistinguishReport b2_distinguish_report(long ell);

/// Both branches: asserts 24 f_4 ∈ A¹·A³ for ell = 0 and the non-membership for
/// ell = 1. Throws VerificationError naming the failed inclusion.
std::pair<DistinguishReport, DistinguishReport> b2_distinguish();

struct NfgReport {
  unsigned q = 0;
  long ell = 0;
  Rational coefficient;  // coefficient of (a_2')^q in f_q, sign included
  bool ok = false;       // |coefficient| == 1/q!
};

/// Coefficient of (a_2')^q in f_q for r = 2. Throws DomainError unless q >= 2 is
/// prime and VerificationError unless |coefficient| = 1/q!.
NfgReport nfg_coefficient(unsigned q, long ell = 0);

bool is_prime(unsigned q);

nlohmann::json to_json(const DistinguishReport& report);
nlohmann::json to_json(const NfgReport& report);

}  // namespace chowbundle
