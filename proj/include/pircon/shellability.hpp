#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pircon/cover_labels.hpp"
#include "pircon/poset.hpp"

namespace pircon {

enum class LabelOrder { Lex, ReversedLex };

/// Labels on the covers of a poset plus the total order used to compare them.
class EdgeLabelling {
 public:
  EdgeLabelling() = default;
  /// `labels[k]` belongs to `p.covers()[k]`.
  EdgeLabelling(const Poset& p, std::vector<std::optional<EdgeLabel>> labels, LabelOrder order);
  static EdgeLabelling from_covers(const Poset& p, const std::vector<CoverRecord>& covers, LabelOrder order);

  LabelOrder order() const { return order_; }
  EdgeLabelling reversed() const;

  /// Throws MissingLabel if (lo, hi) is not a labelled cover.
  EdgeLabel label(Index lo, Index hi) const;
  std::vector<EdgeLabel> sequence(const Chain& chain) const;

  bool less(const EdgeLabel& a, const EdgeLabel& b) const { return order_ == LabelOrder::Lex ? a < b : b < a; }
  bool sequence_less(const std::vector<EdgeLabel>& a, const std::vector<EdgeLabel>& b) const;

 private:
  std::vector<IndexPair> covers_;
  std::vector<std::optional<EdgeLabel>> labels_;
  LabelOrder order_ = LabelOrder::Lex;
};

struct ChainClass {
  bool increasing = false;          // weakly increasing labels
  bool decreasing = false;          // strictly decreasing labels
  bool weakly_decreasing = false;
};

ChainClass classify_chain(const EdgeLabelling& labelling, const Chain& chain);

struct IntervalReport {
  Index x = 0;
  Index y = 0;
  std::size_t chain_count = 0;
  std::size_t increasing_chain_count = 0;
  bool increasing_is_lex_minimal = false;  // strictly below every other chain
  std::size_t decreasing_chain_count = 0;
  bool graded = false;

  bool el_pass() const { return increasing_chain_count == 1 && increasing_is_lex_minimal; }
};

IntervalReport verify_el_interval(const Poset& p, const EdgeLabelling& labelling, Index x, Index y);

struct ElFailure {
  Index x = 0;
  Index y = 0;
  std::string reason;
  std::size_t interval_size = 0;
  std::vector<Chain> chains;
  std::vector<std::vector<EdgeLabel>> labels;
};

struct ElPosetReport {
  std::size_t intervals_checked = 0;
  std::vector<ElFailure> failures;  // ascending (x, y)
  /// Failure over the smallest interval (ties: first in order).
  std::optional<std::size_t> minimal_failure;

  bool passed() const { return failures.empty(); }
};

/// Checks every x < y. Throws NotBounded / NotGraded first.
ElPosetReport verify_el_poset(const Poset& p, const EdgeLabelling& labelling, unsigned jobs = 1);

/// The unique strictly decreasing x-y chain; throws NonUniqueDecreasing otherwise.
Chain decreasing_chain(const Poset& p, const EdgeLabelling& labelling, Index x, Index y);

/// Labelling of a Bruhat-ordered involution family from cover labels.
EdgeLabelling involution_labelling(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                   const CoverLabeller& labeller, LabelOrder order);
inline EdgeLabelling involution_labelling(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                          LabelVariant variant, LabelOrder order) {
  return involution_labelling(elements, bruhat, formula_labeller(variant), order);
}

struct LabellingSearch {
  std::size_t solutions = 0;
  std::size_t nodes = 0;
  bool complete = true;  // false when the node budget ran out or the visitor stopped early
};

/// Backtracking search for lex labellings of a Bruhat-ordered involution
/// family in which every cover σ ⋖ τ gets a label (di, j) with j > di and
/// τ(di) > τ(j), distinct labels leave each σ, and every interval has a
/// unique increasing chain, which is lex-minimal, and a unique strictly
/// decreasing chain. `visit` gets one label per cover of `bruhat` and returns
/// false to stop. `node_limit` 0 means unbounded.
LabellingSearch search_involution_labellings(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                             const std::function<bool(const std::vector<EdgeLabel>&)>& visit,
                                             std::size_t node_limit = 0);

/// Labeller that looks covers up in a table aligned with `bruhat.covers()`.
CoverLabeller table_labeller(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                             const std::vector<EdgeLabel>& labels);

/// First labelling found on the signed involutions I^B_n; throws NoCandidate
/// if the search ends without one.
CoverLabeller searched_labeller(int n, std::size_t node_limit = 0);

struct FpfClosureFailure {
  std::string lower;
  std::string upper;
  std::string reason;
  std::vector<std::string> chain;
};

struct FpfClosureReport {
  int n = 0;
  std::string labeling;
  /// The lex labelling on the signed involutions has a unique lex-minimal
  /// increasing chain and a unique decreasing chain on every interval.
  bool labelling_validated = false;
  std::size_t pairs_checked = 0;
  std::vector<FpfClosureFailure> failures;

  bool passed() const { return labelling_validated && failures.empty(); }
};

/// For every σ < τ in F^B_n, the decreasing σ-τ chain computed in I^B_n must
/// consist of fixed-point-free elements.
FpfClosureReport fpf_closure_check(int n, const CoverLabeller& labeller, std::string labeling_name, unsigned jobs = 1);
inline FpfClosureReport fpf_closure_check(int n, LabelVariant variant, unsigned jobs = 1) {
  return fpf_closure_check(n, formula_labeller(variant), std::string(to_string(variant)), jobs);
}

struct RankGradednessReport {
  std::size_t intervals_checked = 0;
  std::vector<IndexPair> failures;  // (x, y) with a maximal chain of the wrong length

  bool passed() const { return failures.empty(); }
};

/// Every maximal chain of every interval [x, y] has length rank[y] - rank[x].
RankGradednessReport check_rank_gradedness(const Poset& p, const std::vector<int>& rank, unsigned jobs = 1);

nlohmann::json to_json(const ElPosetReport& report, const Poset& p);
nlohmann::json to_json(const RankGradednessReport& report, const Poset& p);
nlohmann::json to_json(const FpfClosureReport& report);

}  // namespace pircon
