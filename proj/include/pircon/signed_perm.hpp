#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pircon/poset.hpp"

namespace pircon {

// Positions and values live in [±n] = {-n, ..., -1, 1, ..., n}, totally ordered
// as integers; there is no 0. A "slot" is the 0-based rank of a position in
// that order.

int to_slot(int n, int position);
int from_slot(int n, int slot);
/// -n, ..., -1, 1, ..., n
std::vector<int> signed_range(int n);

/// A permutation of [±n] (an element of S_2n), stored as the full line of
/// images in slot order.
class FullPermutation {
 public:
  FullPermutation() = default;
  FullPermutation(int n, std::vector<int> line);

  static FullPermutation identity(int n);

  int n() const { return n_; }
  int operator()(int position) const { return line_[static_cast<std::size_t>(to_slot(n_, position))]; }
  const std::vector<int>& line() const { return line_; }

  FullPermutation compose(const FullPermutation& inner) const;  // this ∘ inner
  FullPermutation inverse() const;
  bool is_involution() const;
  bool has_fixed_point() const;
  /// σ(-i) = -σ(i) for every i.
  bool is_signed() const;

  /// Comma-separated full line.
  std::string to_string() const;

  auto operator<=>(const FullPermutation&) const = default;

 private:
  int n_ = 0;
  std::vector<int> line_;
};

/// Signed permutation: a FullPermutation with σ(-i) = -σ(i), stored as the
/// window σ(1), ..., σ(n).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  static SignedPermutation from_full(const FullPermutation& full);
  /// Accepts window notation ("2,1") or a full line over [±n] ("-1,-2,2,1").
  static SignedPermutation parse(std::string_view text);

  int n() const { return static_cast<int>(window_.size()); }
  int operator()(int position) const {
    return position > 0 ? window_[static_cast<std::size_t>(position - 1)]
                        : -window_[static_cast<std::size_t>(-position - 1)];
  }
  const std::vector<int>& window() const { return window_; }
  FullPermutation full() const;

  bool is_involution() const;
  bool has_fixed_point() const;

  /// Window notation, e.g. "-1,-2".
  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

/// σ[i,j] = |{k ∈ [±n] : k <= i, σ(k) >= j}|.
int dominance_count(const FullPermutation& s, int i, int j);
inline int dominance_count(const SignedPermutation& s, int i, int j) { return dominance_count(s.full(), i, j); }

/// All σ[i,j] at once, indexed by slots.
class DominanceTable {
 public:
  explicit DominanceTable(const FullPermutation& s);
  int at_slots(int i_slot, int j_slot) const { return counts_[static_cast<std::size_t>(i_slot * size_ + j_slot)]; }
  /// Entrywise <=, i.e. Bruhat order of the underlying permutations.
  bool dominated_by(const DominanceTable& other) const;

 private:
  int size_ = 0;
  std::vector<int> counts_;
};

/// Bruhat order via entrywise comparison of dominance counts. Throws SizeMismatch.
bool bruhat_leq(const FullPermutation& a, const FullPermutation& b);
bool bruhat_leq(const SignedPermutation& a, const SignedPermutation& b);

enum class Family {
  Involutions,             // involutions of S_2n (on [±n])
  FpfInvolutions,          // C(w0) in S_2n
  SignedInvolutions,       // I^B_n
  FpfSignedInvolutions,    // F^B_n
};

std::string_view to_string(Family f);
/// "inv", "fpf-inv", "signed-inv", "fpf-signed-inv".
Family parse_family(std::string_view name);
bool is_signed_family(Family f);

/// Complete, duplicate-free, sorted lexicographically (by window for signed
/// families, by full line otherwise). Generated by pairing positions rather
/// than by filtering the whole group.
std::vector<FullPermutation> generate_family(Family f, int n);
/// Signed families only, as windows (same order as `generate_family`).
std::vector<SignedPermutation> generate_signed_family(Family f, int n);

/// Display name: window notation for signed permutations, full line otherwise.
std::string element_name(const FullPermutation& s, bool as_window);

struct PermStats {
  int inv = 0;
  int neg = 0;
  int length = 0;
  int dna = 0;
  std::optional<int> rank;  // only defined for involutions
};

/// inv counted over pairs of [±n]; neg and dna over [n]. Throws FormulaMismatch
/// if a parity invariant fails.
PermStats stats(const SignedPermutation& s);

/// Reverse permutation w0(i) = -i.
SignedPermutation longest_element(int n);
/// Product (-n,-n+1)(-n+2,-n+3)...(n-1,n) of adjacent transpositions.
SignedPermutation fpf_bottom(int n);
/// σ -> w0 σ w0 on S_2n.
FullPermutation conjugate_by_w0(const FullPermutation& s);
/// The conjugation σ -> w0 σ w0 as a map on a list of permutations closed under it.
PosetMap conjugation_map(const std::vector<FullPermutation>& elements);

enum class OrderDirection { Bruhat, Dual };

std::string_view to_string(OrderDirection d);
OrderDirection parse_order(std::string_view name);

/// Induced Bruhat order (or its dual) on a homogeneous element list.
Poset build_bruhat_poset(const std::vector<FullPermutation>& elements, OrderDirection direction, bool window_names);
Poset build_bruhat_poset(const std::vector<SignedPermutation>& elements, OrderDirection direction);

}  // namespace pircon
