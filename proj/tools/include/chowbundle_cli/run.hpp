#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace chowbundle::cli {

enum class Format { json, text };

/// One invocation. Unset optionals take per-subcommand defaults in validate().
struct RunConfig {
  std::string subcommand;
  std::optional<unsigned> r;
  std::optional<long> ell;
  std::optional<unsigned> m;
  std::optional<std::size_t> order;
  std::optional<unsigned> d;
  std::vector<unsigned> q;
  bool full = false;
  Format format = Format::json;
  std::optional<std::string> output;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;       // document for stdout or --output
  std::string diagnostics;  // for stderr
};

const std::vector<std::string>& subcommands();

/// Fills defaults and rejects invalid combinations with UsageError.
RunConfig validate(RunConfig config);

/// The parameters a result depends on, after defaults; part of the cache key.
nlohmann::json canonical_params(const RunConfig& config);

/// Runs a validated or unvalidated config. Never throws for usage or
/// assertion failures; they are reported through the exit code.
RunResult run(const RunConfig& config);

/// Flattens a JSON document into sorted "path: value" lines.
std::string render_text(const nlohmann::json& doc);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

/// Version string mixed into cache keys.
std::string artifact_version();

}  // namespace chowbundle::cli
