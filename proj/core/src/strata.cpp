#include "chowbundle/strata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chowbundle/errors.hpp"

namespace chowbundle {

SplittingType::SplittingType(std::vector<long> e) : e_(std::move(e)) {
  if (e_.empty()) throw DomainError("splitting type of rank 0");
  if (!std::is_sorted(e_.begin(), e_.end())) {
    throw DomainError("splitting type must be weakly increasing");
  }
}

long SplittingType::degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

std::vector<unsigned> SplittingType::multiplicities() const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i == 0 || e_[i] != e_[i - 1]) out.push_back(0);
    ++out.back();
  }
  return out;
}

std::uint64_t u_invariant(const SplittingType& e) {
  const auto& v = e.values();
  std::uint64_t u = 0;
  for (long ei : v) {
    for (long ej : v) {
      if (ei - ej - 1 > 0) u += static_cast<std::uint64_t>(ei - ej - 1);
    }
  }
  return u;
}

std::vector<SplittingType> enumerate_types(unsigned r, long ell, std::uint64_t u_max) {
  if (r == 0) throw DomainError("rank must be positive");
  const long spread = static_cast<long>(u_max) + 1;
  // With e_1 = first and e_r <= first + spread the sum lies in
  // [r·first, r·first + (r−1)·spread]; this bounds first.
  const long rl = static_cast<long>(r);
  auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const long lo = floor_div(ell - (rl - 1) * spread, rl);
  const long hi = floor_div(ell, rl);

  std::vector<SplittingType> out;
  std::vector<long> e(r);
  std::function<void(std::size_t, long)> fill = [&](std::size_t i, long remaining) {
    if (i == r) {
      if (remaining != 0) return;
      SplittingType t(e);
      if (u_invariant(t) <= u_max) out.push_back(std::move(t));
      return;
    }
    const long left = static_cast<long>(r - i);
    for (long v = e[i - 1]; v <= e[0] + spread; ++v) {
      // the remaining entries are all >= v
      if (v * left > remaining) break;
      if ((e[0] + spread) * left < remaining) return;
      e[i] = v;
      fill(i + 1, remaining - v);
    }
  };
  for (long first = lo; first <= hi; ++first) {
    e[0] = first;
    fill(1, ell - first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntSeries free_algebra_hilbert(const std::vector<unsigned>& weights, std::size_t order) {
  IntSeries s(order + 1, 0);
  s[0] = 1;
  for (unsigned w : weights) {
    if (w == 0) throw DomainError("generator weight must be positive");
    // multiply by 1/(1 − t^w)
    for (std::size_t n = w; n <= order; ++n) s[n] += s[n - w];
  }
  return s;
}

IntSeries stratum_hilbert(const SplittingType& e, std::size_t order, bool dagger) {
  std::vector<unsigned> weights;
  for (unsigned ri : e.multiplicities()) {
    for (unsigned k = 1; k <= ri; ++k) weights.push_back(k);
  }
  if (!dagger) {
    weights.push_back(1);
    weights.push_back(2);
  }
  return free_algebra_hilbert(weights, order);
}

IntSeries ambient_hilbert(unsigned r, std::size_t order, bool dagger) {
  std::vector<unsigned> weights;
  if (!dagger) {
    weights.push_back(1);
    weights.push_back(2);
  }
  for (unsigned i = 1; i <= r; ++i) weights.push_back(i);
  for (unsigned i = 1; i + 1 <= r; ++i) weights.push_back(i);
  return free_algebra_hilbert(weights, order);
}

RankIdentityReport rank_identity_check(unsigned r, long ell, std::size_t order, bool dagger) {
  RankIdentityReport report;
  report.r = r;
  report.ell = ell;
  report.order = order;
  report.dagger = dagger;

  const IntSeries ambient = ambient_hilbert(r, order, dagger);
  struct Stratum {
    SplittingType type;
    std::uint64_t u;
    IntSeries series;
  };
  std::vector<Stratum> strata;
  for (auto& t : enumerate_types(r, ell, order)) {
    const auto u = u_invariant(t);
    auto series = stratum_hilbert(t, order - u, dagger);
    strata.push_back({std::move(t), u, std::move(series)});
  }

  report.ok = true;
  for (std::size_t i = 0; i <= order; ++i) {
    DegreeReport d;
    d.degree = i;
    d.ambient = ambient[i];
    for (const auto& s : strata) {
      if (s.u > i) continue;
      const auto c = s.series[i - s.u];
      d.strata_sum += c;
      d.per_stratum.push_back({s.type, s.u, c});
    }
    if (d.strata_sum != d.ambient && report.ok) {
      report.ok = false;
      report.first_failing_degree = i;
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

CodimensionReport complement_codim_check(unsigned r, long ell, unsigned m) {
  CodimensionReport report;
  report.r = r;
  report.ell = ell;
  report.m = m;
  const long expected = ell + static_cast<long>(m) * static_cast<long>(r) + 1;
  if (expected < 0) throw DomainError("negative expected codimension");
  report.expected = static_cast<std::uint64_t>(expected);
  // Every type with u(e) <= expected is enumerated, so the minimum over the
  // bounded search is the true minimum whenever it is <= expected.
  for (const auto& t : enumerate_types(r, ell, report.expected)) {
    if (t.values().front() >= -static_cast<long>(m)) continue;
    const auto u = u_invariant(t);
    if (!report.minimum || u < *report.minimum) {
      report.minimum = u;
      report.witness = t;
    }
  }
  // For r >= 2 some type always has e_1 < −m; for r = 1 the only type is (ell).
  report.complement_empty = r == 1 && ell >= -static_cast<long>(m);
  report.ok = report.complement_empty || (report.minimum && *report.minimum == report.expected);
  return report;
}

nlohmann::json to_json(const RankIdentityReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : report.degrees) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& s : d.per_stratum) {
      per.push_back({{"e", s.type.values()}, {"u", s.u}, {"contribution", s.contribution}});
    }
    degrees.push_back({{"i", d.degree},
                       {"ambient", d.ambient},
                       {"strata_sum", d.strata_sum},
                       {"per_stratum", std::move(per)}});
  }
  return {{"degrees", std::move(degrees)},
          {"r", report.r},
          {"ell", report.ell},
          {"order", report.order},
          {"dagger", report.dagger},
          {"ok", report.ok},
          {"first_failing_degree", report.first_failing_degree
                                       ? nlohmann::json(*report.first_failing_degree)
                                       : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const CodimensionReport& report) {
  return {{"r", report.r},
          {"ell", report.ell},
          {"m", report.m},
          {"expected", report.expected},
          {"minimum", report.minimum ? nlohmann::json(*report.minimum) : nlohmann::json(nullptr)},
          {"complement_empty", report.complement_empty},
          {"witness", report.witness ? nlohmann::json(report.witness->values()) : nlohmann::json(nullptr)},
          {"ok", report.ok}};
}

}  // namespace chowbundle
