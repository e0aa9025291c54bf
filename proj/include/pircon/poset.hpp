#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pircon {

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;
using Chain = std::vector<Index>;

/// Fixed-width-per-row bit matrix; row r is a bitset over columns.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Relation { Less, Greater, Equal, Incomparable, Covers, CoveredBy };

/// Result of `order_query(x, y)`: `CoveredBy` means x ⋖ y, `Covers` means y ⋖ x.
const char* to_string(Relation r);

struct Subposet;

/// Finite poset, immutable after construction.
///
/// Elements are indices 0..N-1 carrying display names. The strict order is
/// held as a dense reachability matrix (plus its transpose) and the Hasse
/// diagram as sorted cover lists. All enumerations iterate indices ascending.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `relations` (pairs lo < hi, need not be
  /// reduced or transitive). Reflexive pairs are ignored.
  static Poset build(std::vector<std::string> names, std::span<const IndexPair> relations);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Index x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> find(const std::string& name) const;

  bool less(Index x, Index y) const { return above_.test(x, y); }
  bool leq(Index x, Index y) const { return x == y || less(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  /// x ⋖ y
  bool covered_by(Index x, Index y) const;
  Relation order_query(Index x, Index y) const;

  /// Sorted (lo, hi) pairs of the Hasse diagram.
  const std::vector<IndexPair>& covers() const { return covers_; }
  /// Position of (lo, hi) in `covers()`, if it is a cover.
  std::optional<std::size_t> cover_index(Index lo, Index hi) const;
  const std::vector<Index>& upper_covers(Index x) const { return up_.at(x); }
  const std::vector<Index>& lower_covers(Index x) const { return down_.at(x); }

  std::optional<Index> top() const { return top_; }
  std::optional<Index> bottom() const { return bottom_; }
  bool is_minimal(Index x) const { return down_.at(x).empty(); }
  bool is_maximal(Index x) const { return up_.at(x).empty(); }
  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;

  /// Elements strictly above / below x as bitsets over indices.
  std::span<const std::uint64_t> above_row(Index x) const { return above_.row(x); }
  std::span<const std::uint64_t> below_row(Index x) const { return below_.row(x); }

  /// Length of the longest chain ending at x (minimal elements have height 0).
  std::size_t height(Index x) const { return height_.at(x); }

  Subposet induced(std::vector<Index> keep) const;
  Subposet principal_ideal(Index p) const;
  Subposet interval(Index x, Index y, bool open) const;
  Poset dual() const;
  Subposet proper_part() const;

  /// All saturated x-y chains, in lexicographic order of their index sequences.
  std::vector<Chain> chains_between(Index x, Index y) const;
  /// All maximal chains (from a minimal to a maximal element), lexicographic.
  std::vector<Chain> maximal_chains() const;
  /// True when every maximal chain has the same length.
  bool graded() const;

  /// Structural equality: same names, same order.
  bool operator==(const Poset& other) const;

 private:
  void finalize();
  void check_index(Index x) const;

  std::vector<std::string> names_;
  BitMatrix above_;  // above_(x, y) <=> x < y
  BitMatrix below_;  // below_(y, x) <=> x < y
  std::vector<IndexPair> covers_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
  std::vector<std::size_t> height_;
  std::optional<Index> top_;
  std::optional<Index> bottom_;
};

/// An induced subposet together with the map from its indices to the host's.
struct Subposet {
  Poset poset;
  std::vector<Index> embedding;
};

/// Element map m: P -> P, one target per element.
class PosetMap {
 public:
  PosetMap() = default;
  explicit PosetMap(std::vector<Index> image) : image_(std::move(image)) {}

  static PosetMap identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Index operator()(Index x) const { return image_[x]; }
  const std::vector<Index>& image() const { return image_; }

  PosetMap compose(const PosetMap& inner) const;  // this ∘ inner
  PosetMap inverse() const;
  bool is_identity() const;
  /// Multiplicative order of a bijection.
  std::size_t order() const;

  bool operator==(const PosetMap&) const = default;

 private:
  std::vector<Index> image_;
};

bool is_automorphism(const Poset& p, const PosetMap& m);
/// Throws NotAutomorphism unless `m` is a bijection preserving covers both ways.
void require_automorphism(const Poset& p, const PosetMap& m);
/// Every automorphism of `p`, by brute force over cover-respecting bijections.
std::vector<PosetMap> automorphisms(const Poset& p);

/// Induced subposet on the fixed elements of an automorphism.
Subposet fixed_subposet(const Poset& p, const PosetMap& tau);
/// Restricts `m` to a subposet; throws NotAutomorphism if the subset is not m-stable.
PosetMap restrict_map(const PosetMap& m, const Subposet& sub);

nlohmann::json to_json(const Poset& p, const std::string& name);
Poset poset_from_json(const nlohmann::json& j);
std::string to_dot(const Poset& p, const std::string& name);

}  // namespace pircon
