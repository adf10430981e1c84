#include "chowbundle_cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chowbundle/bundlecalc.hpp"
#include "chowbundle/errors.hpp"
#include "chowbundle/lattice.hpp"
#include "chowbundle/relations.hpp"
#include "chowbundle/serialize.hpp"
#include "chowbundle/strata.hpp"

namespace chowbundle::cli {

namespace {

using nlohmann::json;

struct Assertions {
  json list = json::array();
  std::vector<std::string> failed;

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    json a = {{"name", name}, {"ok", ok}};
    if (!detail.empty()) a["detail"] = detail;
    list.push_back(std::move(a));
    if (!ok) failed.push_back(name);
  }
};

json display(const TruncatedSeries& s) {
  json out = json::array();
  for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(s[i].str());
  return out;
}

GradedPolynomial drop_w(const GradedPolynomial& p, unsigned r) {
  const RingPtr target = dagger_ring(r);
  std::vector<GradedPolynomial> images;
  for (const auto& v : p.ring()->variables()) {
    if (v.name == "w1" || v.name == "w2") {
      images.push_back(GradedPolynomial::zero(target));
    } else {
      images.push_back(GradedPolynomial::variable(target, v.name));
    }
  }
  return p.substitute(target, images);
}

json run_chern(const RunConfig& c, Assertions& checks) {
  BundleParams p{*c.r, *c.ell, *c.m, *c.order, !c.full};
  const TruncatedSeries series = pushforward_chern(p);
  if (c.full) {
    BundleParams mod = p;
    mod.mod_w = true;
    const TruncatedSeries reference = pushforward_chern_mod_w(mod);
    bool agree = reference.order() == series.order();
    for (std::size_t i = 0; agree && i <= series.order(); ++i) agree = drop_w(series[i], p.r) == reference[i];
    checks.check("mod_w_agreement", agree);
  }
  return {{"asserted_order", p.asserted_order()},
          {"rank", p.pushforward_rank()},
          {"series", to_json(series)},
          {"display", display(series)}};
}

json run_capital_f(const RunConfig& c, Assertions& checks) {
  const TruncatedSeries F = capital_F(*c.r, *c.ell, *c.order);
  checks.check("constant_term_one", F[0].is_one());
  bool graded = true;
  for (std::size_t i = 0; i <= F.order(); ++i) graded = graded && F[i].is_homogeneous(static_cast<unsigned>(i));
  checks.check("homogeneous_coefficients", graded);
  return {{"series", to_json(F)}, {"display", display(F)}};
}

json run_strata(const RunConfig& c, Assertions& checks) {
  json rank = json::object();
  for (bool dagger : {true, false}) {
    const auto report = rank_identity_check(*c.r, *c.ell, *c.order, dagger);
    checks.check(dagger ? "rank_identity_dagger" : "rank_identity", report.ok);
    rank[dagger ? "dagger" : "full"] = to_json(report);
  }
  json codim = json::array();
  for (unsigned m = 0; m <= *c.m; ++m) {
    // Only meaningful while ell + m·r + 1 >= 0.
    if (*c.ell + static_cast<long>(m) * static_cast<long>(*c.r) + 1 < 0) continue;
    const auto report = complement_codim_check(*c.r, *c.ell, m);
    checks.check("complement_codimension_m" + std::to_string(m), report.ok);
    codim.push_back(to_json(report));
  }
  return {{"rank_identity", std::move(rank)}, {"complement_codimension", std::move(codim)}};
}

json run_relations(const RunConfig& c, Assertions& checks) {
  const unsigned r = *c.r;
  const unsigned d = *c.d;
  json table = json::array();
  bool degrees_ok = true;
  for (unsigned i = 0; i <= 1; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      const GradedPolynomial f = f_class(i, j, r, d);
      const bool homogeneous = f.is_homogeneous(r + i + j);
      degrees_ok = degrees_ok && homogeneous;
      table.push_back({{"i", i},
                       {"j", j},
                       {"degree", r + i + j},
                       {"homogeneous", homogeneous},
                       {"value", to_json(f)},
                       {"display", f.str()}});
    }
  }
  checks.check("f_degree", degrees_ok);

  json leading = json::array();
  bool f1_ok = true;
  bool f0_ok = true;
  const Rational rd(static_cast<long>(r + d));
  for (unsigned j = 0; j <= d; ++j) {
    const unsigned n = j + r;
    if (j >= 1) {
      const auto lp = leading_part(f_class(1, j - 1, r, d), n);
      const bool ok = lp.u_coefficient == Rational(1) && (!lp.has_t || lp.t_coefficient == Rational(-1));
      f1_ok = f1_ok && ok;
      leading.push_back({{"class", "f_1," + std::to_string(j - 1)},
                         {"degree", n},
                         {"t", lp.has_t ? json(lp.t_coefficient.str()) : json(nullptr)},
                         {"u", lp.u_coefficient.str()},
                         {"ok", ok}});
    }
    if (j < d) {
      const auto lp = leading_part(f_class(0, j, r, d), n);
      const bool ok = lp.u_coefficient == Rational(static_cast<long>(d - j)) &&
                      (!lp.has_t || lp.t_coefficient == -rd);
      f0_ok = f0_ok && ok;
      leading.push_back({{"class", "f_0," + std::to_string(j)},
                         {"degree", n},
                         {"t", lp.has_t ? json(lp.t_coefficient.str()) : json(nullptr)},
                         {"u", lp.u_coefficient.str()},
                         {"ok", ok}});
    }
  }
  checks.check("leading_part_f1", f1_ok);
  checks.check("leading_part_f0", f0_ok);

  bool closed_ok = true;
  const auto one = GradedPolynomial::constant(relations_ring(r, d), 1);
  for (long i = 0; i <= 6; ++i) {
    const auto reduced = sigma_pushforward(BiProjElement::monomial(r, d, 1, d - 1 + static_cast<unsigned>(i), one));
    closed_ok = closed_ok && reduced == closed_pushforward(i, r, d);
  }
  checks.check("closed_pushforward", closed_ok);
  return {{"f", std::move(table)}, {"leading", std::move(leading)}};
}

json run_distinguish(const RunConfig&, Assertions& checks) {
  const auto even = b2_distinguish_report(0);
  const auto odd = b2_distinguish_report(1);
  checks.check("b2_membership_24f4", even.membership_24f4);
  checks.check("b2_nonmembership_f4", odd.nonmembership_f4);
  return {{"ell0", to_json(even)}, {"ell1", to_json(odd)}};
}

json run_nfg(const RunConfig& c, Assertions& checks) {
  json out = json::array();
  for (unsigned q : c.q) {
    try {
      out.push_back(to_json(nfg_coefficient(q, *c.ell)));
      checks.check("nfg_coefficient_q" + std::to_string(q), true);
    } catch (const VerificationError& e) {
      checks.check("nfg_coefficient_q" + std::to_string(q), false, e.what());
    }
  }
  return {{"coefficients", std::move(out)}};
}

json run_subring(const RunConfig& c, Assertions& checks) {
  const auto ambient = ambient_hilbert(*c.r, *c.order, /*dagger=*/true);
  json pieces = json::array();
  bool full = true;
  for (unsigned n = 0; n <= *c.order; ++n) {
    const auto piece = dagger_chow_piece(*c.r, *c.ell, n);
    const auto dim = static_cast<std::size_t>(ambient[n]);
    full = full && piece.rank() == dim;
    pieces.push_back({{"n", n},
                      {"rank", piece.rank()},
                      {"ambient_dimension", dim},
                      {"denominator", piece.span.denominator().get_str()}});
  }
  checks.check("lattice_full_rank", full);
  return {{"pieces", std::move(pieces)}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::optional<json> cache_lookup(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::filesystem::path& file, const json& entry) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << entry.dump();
  }
  std::filesystem::rename(tmp, file, ec);
}

void render_into(const json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) render_into(v, path.empty() ? k : path + "." + k, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) render_into(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out << path << ": " << node.get<std::string>() << '\n';
  } else {
    out << path << ": " << node.dump() << '\n';
  }
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"chern",     "capital-f", "strata-check", "relations",
                                              "distinguish", "nfg",     "subring"};
  return names;
}

std::string artifact_version() { return "chowbundle-0.1.0"; }

RunConfig validate(RunConfig c) {
  const auto& s = c.subcommand;
  require(std::find(subcommands().begin(), subcommands().end(), s) != subcommands().end(),
          "unknown subcommand '" + s + "'");
  if (s != "distinguish" && s != "nfg") {
    if (!c.r) c.r = 2;
    require(*c.r >= 1, "--r must be at least 1");
    require(*c.r <= 8, "--r must be at most 8");
  }
  if (s != "distinguish" && s != "relations" && !c.ell) c.ell = 0;
  if (s == "chern") {
    require(*c.ell >= 0, "--ell must be nonnegative for chern");
    if (!c.m) c.m = 1;
    const long asserted = static_cast<long>(*c.m) * static_cast<long>(*c.r) + *c.ell;
    if (!c.order) c.order = static_cast<std::size_t>(asserted);
    require(!c.full || static_cast<long>(*c.order) <= asserted,
            "--order must not exceed m*r + ell = " + std::to_string(asserted) + " with --full");
  } else if (s == "capital-f") {
    if (!c.order) c.order = 4;
  } else if (s == "strata-check") {
    if (!c.order) c.order = 10;
    if (!c.m) c.m = 2;
    require(*c.order <= 30, "--order must be at most 30 for strata-check");
  } else if (s == "relations") {
    if (!c.d) c.d = 2;
    require(*c.d >= 1, "--d must be at least 1");
    require(*c.d <= 8, "--d must be at most 8");
  } else if (s == "nfg") {
    if (c.q.empty()) c.q = {2, 3, 5, 7, 11};
    for (unsigned q : c.q) require(is_prime(q), "--q values must be primes, got " + std::to_string(q));
    for (unsigned q : c.q) require(q <= 31, "--q values must be at most 31");
  } else if (s == "subring") {
    if (!c.order) c.order = 6;
    require(*c.order <= 10, "--order must be at most 10 for subring");
  }
  if (s != "chern") require(!c.full, "--full only applies to chern");
  if (s != "relations") require(!c.d, "--d only applies to relations");
  if (s != "nfg") require(c.q.empty(), "--q only applies to nfg");
  if (s != "chern" && s != "strata-check") require(!c.m, "--m does not apply to " + s);
  if (s == "distinguish" || s == "nfg" || s == "relations") {
    require(!c.order, "--order does not apply to " + s);
  }
  if (s == "distinguish" || s == "nfg") require(!c.r, "--r does not apply to " + s);
  if (s == "distinguish" || s == "relations") require(!c.ell, "--ell does not apply to " + s);
  return c;
}

json canonical_params(const RunConfig& c) {
  json p = json::object();
  if (c.r) p["r"] = *c.r;
  if (c.ell) p["ell"] = *c.ell;
  if (c.m) p["m"] = *c.m;
  if (c.order) p["order"] = *c.order;
  if (c.d) p["d"] = *c.d;
  if (!c.q.empty()) p["q"] = c.q;
  if (c.subcommand == "chern") p["full"] = c.full;
  return p;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  render_into(doc, "", out);
  return out.str();
}

RunResult run(const RunConfig& raw) {
  RunResult result;
  RunConfig c;
  try {
    c = validate(raw);
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.diagnostics = std::string("usage error: ") + e.what() + "\n";
    return result;
  }

  const json params = canonical_params(c);
  std::optional<std::filesystem::path> cache_file;
  if (const char* dir = std::getenv("CHOWBUNDLE_CACHE_DIR"); dir && *dir) {
    const std::string key = fnv1a_hex(c.subcommand + "\n" + params.dump() + "\n" + artifact_version());
    cache_file = std::filesystem::path(dir) / (c.subcommand + "-" + key + ".json");
  }

  json doc;
  std::optional<json> cached;
  if (cache_file) cached = cache_lookup(*cache_file);
  if (cached && cached->contains("document") && cached->value("params", json()) == params) {
    doc = (*cached)["document"];
  } else {
    Assertions checks;
    json body;
    try {
      if (c.subcommand == "chern") body = run_chern(c, checks);
      else if (c.subcommand == "capital-f") body = run_capital_f(c, checks);
      else if (c.subcommand == "strata-check") body = run_strata(c, checks);
      else if (c.subcommand == "relations") body = run_relations(c, checks);
      else if (c.subcommand == "distinguish") body = run_distinguish(c, checks);
      else if (c.subcommand == "nfg") body = run_nfg(c, checks);
      else body = run_subring(c, checks);
    } catch (const VerificationError& e) {
      checks.check(e.name(), false, e.what());
    } catch (const DomainError& e) {
      result.exit_code = kExitUsage;
      result.diagnostics = std::string("usage error: ") + e.what() + "\n";
      return result;
    }
    doc = {{"subcommand", c.subcommand},
           {"params", params},
           {"result", std::move(body)},
           {"assertions", std::move(checks.list)},
           {"failed", checks.failed},
           {"ok", checks.failed.empty()}};
    if (cache_file) cache_store(*cache_file, {{"params", params}, {"document", doc}});
  }

  if (!doc["ok"].get<bool>()) {
    result.exit_code = kExitAssertion;
    for (const auto& name : doc["failed"]) {
      result.diagnostics += "assertion failed: " + name.get<std::string>() + "\n";
    }
  }
  result.output = c.format == Format::json ? doc.dump(2) + "\n" : render_text(doc);

  if (c.output) {
    std::ofstream out(*c.output, std::ios::binary);
    if (!out || !(out << result.output)) {
      result.exit_code = kExitUsage;
      result.diagnostics += "usage error: cannot write " + *c.output + "\n";
    }
  }
  return result;
}

}  // namespace chowbundle::cli
