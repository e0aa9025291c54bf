#include "pircon/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pircon/error.hpp"

namespace pircon {

namespace {

// Relation on m elements as an m*m bit mask (bit a*m+b means a < b).
using Mask = std::uint64_t;

Mask relabel(Mask rel, std::size_t m, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (rel >> (a * m + b) & 1U) out |= Mask{1} << (perm[a] * m + perm[b]);
  return out;
}

Mask canonical(Mask rel, std::size_t m) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Mask best = rel;
  do {
    best = std::min(best, relabel(rel, m, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset with_top(Mask rel, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.push_back("x" + std::to_string(a));
  names.push_back("top");
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < m; ++a) {
    pairs.emplace_back(a, m);
    for (std::size_t b = 0; b < m; ++b)
      if (rel >> (a * m + b) & 1U) pairs.emplace_back(a, b);
  }
  return Poset::build(std::move(names), pairs);
}

}  // namespace

std::vector<Poset> posets_with_top(std::size_t max_size) {
  std::vector<Poset> out;
  for (std::size_t m = 0; m + 1 <= max_size; ++m) {
    if (m > 7) throw Error(ErrorCode::InvalidConfig, "exhaustive poset enumeration is capped at 8 elements");
    std::vector<IndexPair> slots;  // natural labelling: a < b only for a < b as integers
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) slots.emplace_back(a, b);
    std::set<Mask> seen;
    for (Mask subset = 0; subset < (Mask{1} << slots.size()); ++subset) {
      Mask rel = 0;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (subset >> k & 1U) rel |= Mask{1} << (slots[k].first * m + slots[k].second);
      bool transitive = true;
      for (std::size_t a = 0; a < m && transitive; ++a)
        for (std::size_t b = 0; b < m && transitive; ++b)
          for (std::size_t c = 0; c < m && transitive; ++c)
            if ((rel >> (a * m + b) & 1U) && (rel >> (b * m + c) & 1U) && !(rel >> (a * m + c) & 1U))
              transitive = false;
      if (!transitive) continue;
      if (seen.insert(canonical(rel, m)).second) out.push_back(with_top(rel, m));
    }
  }
  return out;
}

Poset random_poset_with_top(std::size_t size, double edge_probability, std::mt19937_64& rng) {
  if (size == 0) throw Error(ErrorCode::InvalidConfig, "random poset needs at least one element");
  const std::size_t m = size - 1;
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.push_back("x" + std::to_string(a));
  names.push_back("top");
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < m; ++a) {
    pairs.emplace_back(a, m);
    for (std::size_t b = a + 1; b < m; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  }
  return Poset::build(std::move(names), pairs);
}

void TheoremTally::merge(const TheoremTally& other) {
  posets += other.posets;
  spms += other.spms;
  automorphisms += other.automorphisms;
  pairs += other.pairs;
  claims_checked += other.claims_checked;
  induced_failures += other.induced_failures;
  claim_failures += other.claim_failures;
  lifting_failures += other.lifting_failures;
  messages.insert(messages.end(), other.messages.begin(), other.messages.end());
}

TheoremTally check_fixed_point_theorem(const Poset& p, std::size_t max_spms, bool check_claims) {
  TheoremTally tally;
  tally.posets = 1;
  std::vector<Matching> spms;
  for_each_spm(p, [&](const Matching& m) {
    spms.push_back(m);
    return max_spms == 0 || spms.size() < max_spms;
  });
  const auto autos = automorphisms(p);
  tally.spms = spms.size();
  tally.automorphisms = autos.size();

  for (const auto& m : spms) {
    if (!check_lifting(p, m).holds) {
      ++tally.lifting_failures;
      tally.messages.push_back("lifting property fails for an SPM");
    }
    for (const auto& tau : autos) {
      ++tally.pairs;
      try {
        const InducedSpm induced = induced_spm(p, m, tau, {.check_claims = check_claims});
        tally.claims_checked += induced.claims_checked;
        if (!check_spm(induced.fixed.poset, induced.matching).valid) {
          ++tally.induced_failures;
          tally.messages.push_back("induced matching is not an SPM");
        } else if (!check_lifting(induced.fixed.poset, induced.matching).holds) {
          ++tally.lifting_failures;
          tally.messages.push_back("lifting property fails for an induced SPM");
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ClaimViolation && e.code() != ErrorCode::ExtremeNotUnique) throw;
        ++tally.claim_failures;
        tally.messages.push_back(e.what());
      }
    }
  }
  return tally;
}

}  // namespace pircon
