#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pircon/matchings.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// The SPMs M_i = τ^i ∘ M ∘ τ^{-i}, i = 1..K, where K is the order of τ.
/// `matchings[K-1]` is M itself.
struct ConjugatedFamily {
  std::size_t order = 1;
  std::vector<Matching> matchings;
};

/// Closure C(p) of {p} under all M_i, with its unique extremes.
struct OrbitRecord {
  std::vector<Index> members;  // ascending
  Index minimum = 0;
  Index maximum = 0;
};

ConjugatedFamily conjugated_spms(const Poset& p, const Matching& m, const PosetMap& tau);
OrbitRecord orbit(const Poset& p, const ConjugatedFamily& family, Index x);

struct InducedSpmOptions {
  /// Verify the intermediate claims (extremes are fixed, extremes are
  /// monotone across orbits, extremes of a fixed orbit are adjacent in P^τ).
  bool check_claims = true;
};

struct InducedSpm {
  Subposet fixed;          // P^τ with its embedding into P
  Matching matching;       // M° on P^τ's local indices
  std::size_t claims_checked = 0;
};

/// Builds M° on P^τ: M°(p) = max C(p) if p = min C(p), else min C(p).
/// Throws ClaimViolation if a checked claim fails.
InducedSpm induced_spm(const Poset& p, const Matching& m, const PosetMap& tau, InducedSpmOptions options = {});

struct FixedIdealReport {
  Index ideal_top = 0;       // host index
  std::size_t fixed_count = 0;
  bool spm_found = false;    // M° on the fixed ideal passes check_spm
  bool lifting_holds = false;
  std::size_t claims_checked = 0;
};

struct FixedPirconReport {
  bool pircon_confirmed = true;
  std::vector<FixedIdealReport> ideals;  // ascending host index
};

/// For every fixed p that is non-minimal in P^τ, restricts τ to P_{≤p}, takes
/// the ideal's SPM from `classification` and confirms M° is an SPM on
/// (P_{≤p})^τ. Requires `classification` to come from `classify(p)`.
FixedPirconReport fixed_pircon_verify(const Poset& p, const PosetMap& tau, const Classification& classification,
                                      InducedSpmOptions options = {}, unsigned jobs = 1);

nlohmann::json to_json(const FixedPirconReport& report, const Poset& host);

}  // namespace pircon
