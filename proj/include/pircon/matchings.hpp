#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pircon/poset.hpp"

namespace pircon {

/// Candidate matching M: P -> P, one image per element; fixed points allowed.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Index> image) : image_(std::move(image)) {}

  std::size_t size() const { return image_.size(); }
  Index operator()(Index x) const { return image_[x]; }
  const std::vector<Index>& image() const { return image_; }
  bool has_fixed_point() const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Index> image_;
};

enum class Violation {
  None,
  NotInvolution,
  TopNotMatchedDown,
  NotAdjacent,
  SpecialConditionFail,
  FixedPointPresent,
};

const char* to_string(Violation v);

struct MatchingVerdict {
  bool valid = true;
  Violation violation = Violation::None;
  std::optional<IndexPair> witness;

  static MatchingVerdict ok() { return {}; }
  static MatchingVerdict fail(Violation v, Index a, Index b) { return {false, v, IndexPair{a, b}}; }
};

/// Fixed-point-free matching with the special condition on every cover.
MatchingVerdict check_special_matching(const Poset& p, const Matching& m);
/// Special partial matching: involution, M(1̂) ⋖ 1̂, adjacency-or-fixed, and
/// for x ⋖ y with M(x) != y, M(x) < M(y).
MatchingVerdict check_spm(const Poset& p, const Matching& m);

struct LiftingVerdict {
  bool holds = true;
  int part = 0;  // 1, 2 or 3 for the first violated implication
  std::optional<IndexPair> witness;  // (x, y) with x < y and M(y) <= y
};

/// Lifting property for an SPM, checked over every x < y with M(y) <= y:
///   (i) M(x) <= y, (ii) M(x) <= x implies M(x) < M(y),
///   (iii) M(x) >= x implies x <= M(y).
LiftingVerdict check_lifting(const Poset& p, const Matching& m);

struct SpmSearchOptions {
  bool allow_fixed_points = true;
};

/// Backtracking SPM search. Elements are processed top-down (1̂ first, then by
/// decreasing height, ties by ascending index); each element either keeps the
/// partner already forced on it, stays fixed, or is paired with an unmatched
/// lower cover. Candidates are tried in ascending index order, so the first
/// result is deterministic. `visit` returns false to stop the enumeration.
void for_each_spm(const Poset& p, const std::function<bool(const Matching&)>& visit,
                  SpmSearchOptions options = {});
std::optional<Matching> search_spm(const Poset& p, SpmSearchOptions options = {});

struct IdealCertificate {
  Index ideal_top = 0;  // host index
  std::optional<Matching> spm;  // on the ideal's local indices
  std::optional<Matching> special_matching;
  Subposet ideal;
};

struct Classification {
  bool pircon = true;
  std::optional<bool> zircon;  // unset when the special-matching search was skipped
  std::vector<IdealCertificate> ideals;  // non-minimal tops, ascending
};

struct ClassifyOptions {
  bool check_zircon = true;
  unsigned jobs = 1;
};

/// Runs the SPM search on every principal ideal of a non-minimal element.
/// Zircon additionally needs a fixed-point-free SPM on each ideal.
Classification classify(const Poset& p, ClassifyOptions options = {});

nlohmann::json certificate_json(const IdealCertificate& cert, const Poset& host);
nlohmann::json verdict_json(const MatchingVerdict& v, const Poset& p);
/// Reads {"matching": [[x, M(x)], ...]} by element name; unlisted elements are fixed.
Matching matching_from_json(const nlohmann::json& j, const Poset& p);

}  // namespace pircon
