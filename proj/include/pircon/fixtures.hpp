#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pircon/fixed_point.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// Every poset with a maximum on 1..max_size elements, one per isomorphism
/// class (elements "x0", "x1", ... below a top named "top").
std::vector<Poset> posets_with_top(std::size_t max_size);

/// Random naturally-labelled poset on `size - 1` elements plus a top.
Poset random_poset_with_top(std::size_t size, double edge_probability, std::mt19937_64& rng);

struct TheoremTally {
  std::size_t posets = 0;
  std::size_t spms = 0;
  std::size_t automorphisms = 0;
  std::size_t pairs = 0;           // (SPM, automorphism) combinations run
  std::size_t claims_checked = 0;
  std::size_t induced_failures = 0;  // M° failed check_spm on P^τ
  std::size_t claim_failures = 0;    // a claim assertion fired
  std::size_t lifting_failures = 0;  // an SPM (original or induced) broke the lifting property
  std::vector<std::string> messages;

  void merge(const TheoremTally& other);
  bool clean() const { return induced_failures == 0 && claim_failures == 0 && lifting_failures == 0; }
};

/// Runs the fixed-subposet construction for every SPM of `p` (up to
/// `max_spms`, 0 = all) against every automorphism of `p`.
TheoremTally check_fixed_point_theorem(const Poset& p, std::size_t max_spms = 0, bool check_claims = true);

}  // namespace pircon
