#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowbundle {

struct Variable {
  std::string name;
  unsigned weight = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered list of named, positively weighted polynomial variables.
///
/// The order is fixed at construction and drives the canonical monomial order
/// and therefore every serialized form.
class RingSpec {
 public:
  explicit RingSpec(std::vector<Variable> variables);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  unsigned weight(std::size_t i) const { return vars_[i].weight; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but throws StructuralError for unknown names.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<Variable> variables);

/// True when both pointers denote the same variable list.
bool same_ring(const RingPtr& a, const RingPtr& b);

// Standard rings. Names: "w1", "w2", "a1".."ar", "a2'".."ar'", "t1".., "u1"..,
// "x1"..

/// {w1:1, w2:2, a1:1..ar:r, a2':1..ar':r-1}
RingPtr base_ring(unsigned r);
/// base_ring(r) without w1, w2.
RingPtr dagger_ring(unsigned r);
/// {w1:1, w2:2, t1:1..td:d, u1:1..u_{r+d}:r+d}
RingPtr relations_ring(unsigned r, unsigned d);
/// {x1:1..xr:r}, the ring of elementary symmetric functions in r roots.
RingPtr symmetric_ring(unsigned r);

std::string a_name(unsigned i);
std::string a_prime_name(unsigned i);

/// Dense exponent vector with its weighted degree cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(const RingSpec& ring, std::vector<Exponent> exponents);

  static Monomial one(const RingSpec& ring);
  static Monomial variable(const RingSpec& ring, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Returns the monomial with exponent `i` lowered by one; exps[i] must be > 0.
  Monomial lowered(std::size_t i, unsigned weight) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

/// Canonical monomial order: ascending weighted degree; within a degree,
/// descending lexicographic order of the exponent vector (so earlier
/// variables to higher powers come first).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace chowbundle
