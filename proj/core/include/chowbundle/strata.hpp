#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace chowbundle {

/// Splitting type e_1 <= ... <= e_r of a vector bundle on P¹.
class SplittingType {
 public:
  explicit SplittingType(std::vector<long> e);  // throws DomainError unless weakly increasing

  const std::vector<long>& values() const noexcept { return e_; }
  std::size_t rank() const noexcept { return e_.size(); }
  long degree() const;
  /// Multiplicities r_1..r_s of the distinct values d_1 < ... < d_s.
  std::vector<unsigned> multiplicities() const;

  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<long> e_;
};

/// Truncated integer series (Hilbert series coefficients).
using IntSeries = std::vector<std::int64_t>;

/// u(e) = Σ_{i,j} max{0, e_i − e_j − 1}.
std::uint64_t u_invariant(const SplittingType& e);

/// All splitting types of rank r and degree ell with u(e) <= u_max, sorted
/// lexicographically. Only spreads e_r − e_1 <= u_max + 1 are scanned.
std::vector<SplittingType> enumerate_types(unsigned r, long ell, std::uint64_t u_max);

/// Π_i Π_{k=1}^{r_i} (1 − t^k)^{-1}, times (1 − t)^{-1}(1 − t²)^{-1} unless `dagger`.
IntSeries stratum_hilbert(const SplittingType& e, std::size_t order, bool dagger);

/// Hilbert series of the free algebra on generators of weights
/// {1,2} ∪ {1..r} ∪ {1..r-1} ({1,2} dropped when `dagger`).
IntSeries ambient_hilbert(unsigned r, std::size_t order, bool dagger);

/// Π (1 − t^w)^{-1} over the given weights, truncated at `order`.
IntSeries free_algebra_hilbert(const std::vector<unsigned>& weights, std::size_t order);

struct StratumContribution {
  SplittingType type;
  std::uint64_t u = 0;
  std::int64_t contribution = 0;  // rank A^{i-u}(Σ_e)
};

struct DegreeReport {
  std::size_t degree = 0;
  std::int64_t ambient = 0;
  std::int64_t strata_sum = 0;
  std::vector<StratumContribution> per_stratum;
};

struct RankIdentityReport {
  unsigned r = 0;
  long ell = 0;
  std::size_t order = 0;
  bool dagger = false;
  bool ok = false;
  std::optional<std::size_t> first_failing_degree;
  std::vector<DegreeReport> degrees;
};

/// Checks Σ_{e: u(e) <= order} t^{u(e)}·stratum_hilbert(e) ≡ ambient_hilbert mod t^{order+1}.
RankIdentityReport rank_identity_check(unsigned r, long ell, std::size_t order, bool dagger);

struct CodimensionReport {
  unsigned r = 0;
  long ell = 0;
  unsigned m = 0;
  std::uint64_t expected = 0;                // ell + m·r + 1
  std::optional<std::uint64_t> minimum;      // min u(e) over e_1 < −m, if <= expected
  std::optional<SplittingType> witness;
  bool complement_empty = false;             // no e with e_1 < −m exists (only r = 1, ell >= −m)
  bool ok = false;
};

/// min{u(e) : Σe_i = ell, e_1 < −m} == ell + m·r + 1.
CodimensionReport complement_codim_check(unsigned r, long ell, unsigned m);

nlohmann::json to_json(const RankIdentityReport& report);
nlohmann::json to_json(const CodimensionReport& report);

}  // namespace chowbundle
