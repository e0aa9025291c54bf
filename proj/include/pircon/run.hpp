#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pircon/signed_perm.hpp"

namespace pircon {

enum class OutputFormat { Json, Dot, Csv };

std::string_view to_string(OutputFormat f);
OutputFormat parse_format(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kMaxSignedN = 6;
inline constexpr int kMaxFullDegree = 10;  // 2n for families inside S_2n
inline constexpr int kMaxSearchedN = 3;

struct RunConfig {
  std::string command;
  int n = 2;
  std::optional<int> n_max;                 // inclusive upper end of the n range
  std::optional<Family> family;             // per-command default when unset
  std::optional<OrderDirection> order;      // per-command default when unset
  std::string labeling = "ci-candidate";    // ci-candidate, cv-candidate, searched or from-file
  std::filesystem::path labels_file;
  std::optional<OutputFormat> format;       // per-command default when unset
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  bool strict_claims = false;               // evaluate the intermediate claims of the fixed-point construction
  std::size_t random_posets = 0;            // extra seeded random posets for the check-spm suite
  std::filesystem::path out_dir = "out";
  std::filesystem::path poset_file;
  std::filesystem::path matching_file;
};

/// gen, check-spm, pircon, fixed-spm, el-verify, homology, stats.
const std::vector<std::string>& command_names();

/// Throws InvalidConfig on unknown commands, bad ranges or size caps.
void validate(const RunConfig& config);

/// Exit status of `run`.
enum : int { kExitOk = 0, kExitVerificationFailed = 1, kExitError = 2 };

/// Executes one command over the configured n range. Artifacts go to
/// <out_dir>/<command>/<n>/, a manifest to <out_dir>/<command>/manifest.json.
/// Failed verifications also write certificate.json naming the invariant;
/// errors write error.json. Output bytes do not depend on `jobs`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace pircon
