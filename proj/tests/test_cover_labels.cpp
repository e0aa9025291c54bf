#include <doctest.h>

#include <map>
#include <set>

#include "pircon/cover_labels.hpp"
#include "pircon/error.hpp"
#include "pircon/shellability.hpp"

using namespace pircon;

namespace {

struct Labelled {
  std::vector<FullPermutation> elements;
  Poset poset;
};

Labelled bruhat(Family f, int n) {
  auto el = generate_family(f, n);
  Poset p = build_bruhat_poset(el, OrderDirection::Bruhat, is_signed_family(f));
  return {std::move(el), std::move(p)};
}

FullPermutation full(std::vector<int> window) { return SignedPermutation(std::move(window)).full(); }

// Direct scan of the covering-index formula, independent of the library.
int scan_ci(const FullPermutation& s, const FullPermutation& t) {
  const int n = s.n();
  int di = 0;
  for (int p : signed_range(n))
    if (s(p) != t(p)) {
      di = p;
      break;
    }
  for (int j : signed_range(n)) {
    if (j <= di) continue;
    const int v = s(j);
    if (v != 0 && v > s(di) && v <= t(di)) return j;
  }
  return 0;
}

}  // namespace

TEST_CASE("difference index") {
  CHECK(difference_index(full({2, 1}), full({-1, -2})) == -2);
  CHECK(difference_index(full({1, -2}), full({1, 2})) == -2);
  CHECK(difference_index(full({-1, 2}), full({1, 2})) == -1);
  CHECK_THROWS_AS(difference_index(full({1, 2}), full({1, 2})), Error);
}

TEST_CASE("covering index formulas") {
  CHECK(covering_index_B_candidate(full({2, 1}), full({-1, -2})) == 1);
  CHECK(covering_index_B_candidate(full({1}), full({-1})) == 1);
  CHECK(difference_index(full({1}), full({-1})) == -1);

  const auto c = generate_family(Family::FpfInvolutions, 2);
  const Poset p = build_bruhat_poset(c, OrderDirection::Bruhat, false);
  CHECK(covering_index_A(c[*p.bottom()], c[*p.top()]) == scan_ci(c[*p.bottom()], c[*p.top()]));

  for (Family f : {Family::Involutions, Family::SignedInvolutions}) {
    const Labelled fam = bruhat(f, 2);
    for (auto [lo, hi] : fam.poset.covers())
      CHECK(covering_index_A(fam.elements[lo], fam.elements[hi]) == scan_ci(fam.elements[lo], fam.elements[hi]));
  }
}

TEST_CASE("family covers") {
  CHECK(family_covers(bruhat(Family::FpfSignedInvolutions, 2).elements, bruhat(Family::FpfSignedInvolutions, 2).poset,
                      LabelVariant::CoveringIndex)
            .size() == 2);
  CHECK(family_covers(bruhat(Family::FpfSignedInvolutions, 1).elements, bruhat(Family::FpfSignedInvolutions, 1).poset,
                      LabelVariant::CoveringIndex)
            .empty());

  const Labelled ib1 = bruhat(Family::SignedInvolutions, 1);
  const auto covers = family_covers(ib1.elements, ib1.poset, LabelVariant::CoveringIndex);
  REQUIRE(covers.size() == 1);
  CHECK(ib1.poset.name(covers[0].lower) == "1");
  CHECK(ib1.poset.name(covers[0].upper) == "-1");
  REQUIRE(covers[0].label);
  CHECK(*covers[0].label == EdgeLabel{-1, 1});
  CHECK(covers[0].covering_value == 1);
}

TEST_CASE("candidate labels on the covers of I^B_2") {
  const Labelled ib = bruhat(Family::SignedInvolutions, 2);
  CHECK(ib.poset.covers().size() == 8);
  for (LabelVariant v : {LabelVariant::CoveringIndex, LabelVariant::CoveringValue}) {
    std::map<Index, std::set<EdgeLabel>> from;
    std::size_t collisions = 0;
    for (const auto& rec : family_covers(ib.elements, ib.poset, v)) {
      REQUIRE(rec.label);
      CHECK(rec.label->i < rec.label->j);
      if (!from[rec.lower].insert(*rec.label).second) ++collisions;
    }
    // The covering-index candidate gives (-2,-1) to both upper covers of
    // -1,2; the covering-value candidate separates every cover.
    CHECK(collisions == (v == LabelVariant::CoveringIndex ? 1 : 0));
  }
}

TEST_CASE("type-A involution covers get types 1 to 6") {
  for (int n : {2, 3}) {
    const Labelled fam = bruhat(Family::Involutions, n);
    std::set<int> seen;
    for (const auto& rec : family_covers(fam.elements, fam.poset, LabelVariant::CoveringIndex)) {
      REQUIRE(rec.label);
      const int type = classify_cover_type(fam.elements[rec.lower], *rec.label);
      CHECK(type >= 1);
      CHECK(type <= 6);
      seen.insert(type);
    }
    if (n == 3) CHECK(seen == std::set<int>{1, 2, 3, 4, 5, 6});
  }
}

TEST_CASE("type-A labels are EL on the involutions and, reversed, on the fixed-point-free ones") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const Labelled inv = bruhat(Family::Involutions, n);
    const auto lex = involution_labelling(inv.elements, inv.poset, LabelVariant::CoveringIndex, LabelOrder::Lex);
    CHECK(verify_el_poset(inv.poset, lex, 4).passed());

    const Labelled fpf = bruhat(Family::FpfInvolutions, n);
    const auto rev = involution_labelling(fpf.elements, fpf.poset, LabelVariant::CoveringIndex, LabelOrder::ReversedLex);
    CHECK(verify_el_poset(fpf.poset, rev, 4).passed());
  }
}

TEST_CASE("minimal cover") {
  const Labelled f2 = bruhat(Family::FpfSignedInvolutions, 2);
  const auto covers = family_covers(f2.elements, f2.poset, LabelVariant::CoveringIndex);
  const Index bottom = *f2.poset.bottom();
  const Index top = *f2.poset.top();
  const Index middle = 3 - bottom - top;
  CHECK(minimal_cover(f2.poset, covers, bottom, top) == middle);
  CHECK(minimal_cover(f2.poset, covers, bottom, middle) == middle);
  CHECK_THROWS_AS(minimal_cover(f2.poset, covers, top, bottom), Error);
}

TEST_CASE("labels from a file") {
  const nlohmann::json j{{"labels", {{{"lower", "2,1"}, {"upper", "1,-2"}, {"label", {-2, 2}}}}}};
  const CoverLabeller lab = file_labeller(j);
  CHECK(lab(full({2, 1}), full({1, -2})) == EdgeLabel{-2, 2});
  CHECK_FALSE(lab(full({1, -2}), full({-1, -2})));
  CHECK_THROWS_AS(file_labeller(nlohmann::json{{"labels", {{{"lower", "2,1"}}}}}), Error);
}
