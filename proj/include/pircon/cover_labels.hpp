#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pircon/poset.hpp"
#include "pircon/signed_perm.hpp"

namespace pircon {

/// Edge label (i, j), compared lexicographically with the integer order on [±n].
struct EdgeLabel {
  int i = 0;
  int j = 0;
  auto operator<=>(const EdgeLabel&) const = default;
};

std::string to_string(const EdgeLabel& l);

/// Second coordinate used for labels on involution covers.
enum class LabelVariant {
  CoveringIndex,  // type-A covering index formula applied to the full lines
  CoveringValue,  // τ(di), the value the upper element takes at di
};

std::string_view to_string(LabelVariant v);
LabelVariant parse_label_variant(std::string_view name);

struct CoverRecord {
  Index lower = 0;
  Index upper = 0;
  std::optional<EdgeLabel> label;
  int covering_value = 0;  // upper(di)
};

/// di(σ, τ): the first position of [±n] where the full lines differ.
int difference_index(const FullPermutation& s, const FullPermutation& t);
/// min{ j > di : σ(j) ∈ [σ(di)+1, τ(di)] }, where the value window skips 0.
/// Throws NoCandidate when no position qualifies.
int covering_index_A(const FullPermutation& s, const FullPermutation& t);
/// Same formula on the full lines of signed involutions.
int covering_index_B_candidate(const FullPermutation& s, const FullPermutation& t);

/// Label of a cover under `variant`, or nullopt when the formula has no candidate.
std::optional<EdgeLabel> cover_label(const FullPermutation& lower, const FullPermutation& upper, LabelVariant variant);

/// Label for a cover lower ⋖ upper, or nullopt when none is assigned.
using CoverLabeller = std::function<std::optional<EdgeLabel>(const FullPermutation&, const FullPermutation&)>;

CoverLabeller formula_labeller(LabelVariant variant);
/// Labels from {"labels": [{"lower": name, "upper": name, "label": [i, j]}, ...]},
/// matched by element name (window notation for signed permutations).
/// Throws ParseError on malformed input.
CoverLabeller file_labeller(const nlohmann::json& j);

/// Brute-force covers of the induced Bruhat order on `elements` (which must
/// index `bruhat` consistently), each labelled by `labeller`.
std::vector<CoverRecord> family_covers(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                       const CoverLabeller& labeller);
inline std::vector<CoverRecord> family_covers(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                              LabelVariant variant) {
  return family_covers(elements, bruhat, formula_labeller(variant));
}

/// Cover π of x with π <= y whose label is lex-minimal. Throws NotComparable
/// unless x < y, MissingLabel if a candidate cover is unlabelled.
Index minimal_cover(const Poset& p, const std::vector<CoverRecord>& covers, Index x, Index y);

/// Type 1-6 of a type-A involution cover σ ⋖ τ with label (i, j), read from
/// the pattern of i, j, σ(i), σ(j); 0 if none applies. Reporting only.
int classify_cover_type(const FullPermutation& lower, const EdgeLabel& label);

}  // namespace pircon
