#include "pircon/cover_labels.hpp"

#include <algorithm>
#include <map>

#include "pircon/error.hpp"

namespace pircon {

std::string to_string(const EdgeLabel& l) { return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")"; }

std::string_view to_string(LabelVariant v) {
  return v == LabelVariant::CoveringIndex ? "ci-candidate" : "cv-candidate";
}

LabelVariant parse_label_variant(std::string_view name) {
  if (name == "ci-candidate") return LabelVariant::CoveringIndex;
  if (name == "cv-candidate") return LabelVariant::CoveringValue;
  throw Error(ErrorCode::InvalidConfig, "unknown labelling '" + std::string(name) + "'");
}

int difference_index(const FullPermutation& s, const FullPermutation& t) {
  if (s.n() != t.n()) throw Error(ErrorCode::SizeMismatch, "difference index across different n");
  for (int p : signed_range(s.n()))
    if (s(p) != t(p)) return p;
  throw Error(ErrorCode::EqualInputs, "difference index of equal permutations");
}

int covering_index_A(const FullPermutation& s, const FullPermutation& t) {
  const int di = difference_index(s, t);
  const int lo = s(di) + 1;
  const int hi = t(di);
  for (int slot = to_slot(s.n(), di) + 1; slot < 2 * s.n(); ++slot) {
    const int j = from_slot(s.n(), slot);
    const int v = s(j);
    if (v != 0 && v >= lo && v <= hi) return j;
  }
  throw Error(ErrorCode::NoCandidate, "no covering index for " + s.to_string() + " < " + t.to_string());
}

int covering_index_B_candidate(const FullPermutation& s, const FullPermutation& t) { return covering_index_A(s, t); }

std::optional<EdgeLabel> cover_label(const FullPermutation& lower, const FullPermutation& upper, LabelVariant variant) {
  const int di = difference_index(lower, upper);
  if (variant == LabelVariant::CoveringValue) return EdgeLabel{di, upper(di)};
  try {
    return EdgeLabel{di, covering_index_B_candidate(lower, upper)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCandidate) throw;
    return std::nullopt;
  }
}

CoverLabeller formula_labeller(LabelVariant variant) {
  return [variant](const FullPermutation& lower, const FullPermutation& upper) {
    return cover_label(lower, upper, variant);
  };
}

CoverLabeller file_labeller(const nlohmann::json& j) {
  std::map<std::pair<std::string, std::string>, EdgeLabel> table;
  try {
    for (const auto& entry : j.at("labels")) {
      const auto& l = entry.at("label");
      if (!l.is_array() || l.size() != 2) throw Error(ErrorCode::ParseError, "label must be a pair [i, j]");
      table[{entry.at("lower").get<std::string>(), entry.at("upper").get<std::string>()}] =
          EdgeLabel{l[0].get<int>(), l[1].get<int>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("labels file: ") + e.what());
  }
  return [table = std::move(table)](const FullPermutation& lower, const FullPermutation& upper) -> std::optional<EdgeLabel> {
    auto it = table.find({element_name(lower, lower.is_signed()), element_name(upper, upper.is_signed())});
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

std::vector<CoverRecord> family_covers(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                       const CoverLabeller& labeller) {
  if (elements.size() != bruhat.size()) throw Error(ErrorCode::SizeMismatch, "element list does not match poset");
  std::vector<CoverRecord> out;
  out.reserve(bruhat.covers().size());
  for (auto [lo, hi] : bruhat.covers()) {
    CoverRecord rec;
    rec.lower = lo;
    rec.upper = hi;
    rec.label = labeller(elements[lo], elements[hi]);
    rec.covering_value = elements[hi](difference_index(elements[lo], elements[hi]));
    out.push_back(rec);
  }
  return out;
}

Index minimal_cover(const Poset& p, const std::vector<CoverRecord>& covers, Index x, Index y) {
  if (!p.less(x, y)) throw Error(ErrorCode::NotComparable, "minimal cover needs x < y");
  std::optional<Index> best;
  EdgeLabel best_label;
  for (const auto& rec : covers) {
    if (rec.lower != x || !p.leq(rec.upper, y)) continue;
    if (!rec.label) throw Error(ErrorCode::MissingLabel, "unlabelled cover below the target");
    if (!best || *rec.label < best_label) {
      best = rec.upper;
      best_label = *rec.label;
    }
  }
  if (!best) throw Error(ErrorCode::NotComparable, "no cover of x below y");
  if (!(p.covered_by(x, *best) && p.leq(*best, y)))
    throw Error(ErrorCode::NotComparable, "minimal cover does not lie in the interval");
  return *best;
}

int classify_cover_type(const FullPermutation& s, const EdgeLabel& label) {
  const int i = label.i, j = label.j;
  if (!(i < j)) return 0;
  const int si = s(i), sj = s(j);
  if (si == i && sj == j) return 1;
  if (si == i && j < sj) return 2;
  if (i < si && si < j && sj == j) return 3;
  if (i < j && j < si && si < sj) return 4;
  if (i < si && si < j && j < sj) return 5;
  if (i < si && si < sj && sj < j) return 6;
  return 0;
}

}  // namespace pircon
