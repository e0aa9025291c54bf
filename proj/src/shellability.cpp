#include "pircon/shellability.hpp"

#include <algorithm>
#include <map>

#include "pircon/error.hpp"
#include "pircon/parallel.hpp"

namespace pircon {

EdgeLabelling::EdgeLabelling(const Poset& p, std::vector<std::optional<EdgeLabel>> labels, LabelOrder order)
    : covers_(p.covers()), labels_(std::move(labels)), order_(order) {
  if (labels_.size() != covers_.size()) throw Error(ErrorCode::SizeMismatch, "one label per cover expected");
}

EdgeLabelling EdgeLabelling::from_covers(const Poset& p, const std::vector<CoverRecord>& covers, LabelOrder order) {
  std::vector<std::optional<EdgeLabel>> labels(p.covers().size());
  for (const auto& rec : covers) {
    auto k = p.cover_index(rec.lower, rec.upper);
    if (!k) throw Error(ErrorCode::MissingLabel, "cover record is not a cover of the poset");
    labels[*k] = rec.label;
  }
  return EdgeLabelling(p, std::move(labels), order);
}

EdgeLabelling EdgeLabelling::reversed() const {
  EdgeLabelling out = *this;
  out.order_ = order_ == LabelOrder::Lex ? LabelOrder::ReversedLex : LabelOrder::Lex;
  return out;
}

EdgeLabel EdgeLabelling::label(Index lo, Index hi) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), IndexPair{lo, hi});
  if (it == covers_.end() || *it != IndexPair{lo, hi})
    throw Error(ErrorCode::MissingLabel, "(" + std::to_string(lo) + "," + std::to_string(hi) + ") is not a cover");
  const auto& l = labels_[static_cast<std::size_t>(it - covers_.begin())];
  if (!l) throw Error(ErrorCode::MissingLabel, "cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") has no label");
  return *l;
}

std::vector<EdgeLabel> EdgeLabelling::sequence(const Chain& chain) const {
  std::vector<EdgeLabel> seq;
  for (std::size_t k = 1; k < chain.size(); ++k) seq.push_back(label(chain[k - 1], chain[k]));
  return seq;
}

bool EdgeLabelling::sequence_less(const std::vector<EdgeLabel>& a, const std::vector<EdgeLabel>& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [this](const EdgeLabel& u, const EdgeLabel& v) { return less(u, v); });
}

namespace {

ChainClass classify_sequence(const EdgeLabelling& labelling, const std::vector<EdgeLabel>& seq) {
  ChainClass c{true, true, true};
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const auto& a = seq[k - 1];
    const auto& b = seq[k];
    if (labelling.less(b, a)) c.increasing = false;
    if (!labelling.less(b, a)) c.decreasing = false;
    if (labelling.less(a, b)) c.weakly_decreasing = false;
  }
  return c;
}

std::size_t interval_size(const Poset& p, Index x, Index y) {
  std::size_t k = 0;
  for (Index z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) ++k;
  return k;
}

}  // namespace

ChainClass classify_chain(const EdgeLabelling& labelling, const Chain& chain) {
  return classify_sequence(labelling, labelling.sequence(chain));
}

IntervalReport verify_el_interval(const Poset& p, const EdgeLabelling& labelling, Index x, Index y) {
  if (!p.less(x, y)) throw Error(ErrorCode::NotComparable, "EL check needs x < y");
  const auto chains = p.chains_between(x, y);
  std::vector<std::vector<EdgeLabel>> seqs;
  seqs.reserve(chains.size());
  for (const auto& c : chains) seqs.push_back(labelling.sequence(c));

  IntervalReport r;
  r.x = x;
  r.y = y;
  r.chain_count = chains.size();
  r.graded = true;
  std::optional<std::size_t> increasing;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    if (chains[k].size() != chains.front().size()) r.graded = false;
    const ChainClass c = classify_sequence(labelling, seqs[k]);
    if (c.increasing) {
      ++r.increasing_chain_count;
      if (!increasing) increasing = k;
    }
    if (c.decreasing) ++r.decreasing_chain_count;
  }
  if (increasing) {
    r.increasing_is_lex_minimal = true;
    for (std::size_t k = 0; k < chains.size(); ++k)
      if (k != *increasing && !labelling.sequence_less(seqs[*increasing], seqs[k])) r.increasing_is_lex_minimal = false;
  }
  return r;
}

ElPosetReport verify_el_poset(const Poset& p, const EdgeLabelling& labelling, unsigned jobs) {
  if (!p.top() || !p.bottom()) throw Error(ErrorCode::NotBounded, "EL-shellability needs a bounded poset");
  if (!p.graded()) throw Error(ErrorCode::NotGraded, "EL-shellability needs a graded poset");

  std::vector<IndexPair> pairs;
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (p.less(x, y)) pairs.emplace_back(x, y);

  auto results = parallel_map(pairs.size(), jobs, [&](std::size_t k) -> std::optional<ElFailure> {
    auto [x, y] = pairs[k];
    const IntervalReport r = verify_el_interval(p, labelling, x, y);
    if (r.el_pass()) return std::nullopt;
    ElFailure f;
    f.x = x;
    f.y = y;
    if (r.increasing_chain_count != 1)
      f.reason = std::to_string(r.increasing_chain_count) + " increasing chains";
    else
      f.reason = "increasing chain is not lex-minimal";
    f.interval_size = interval_size(p, x, y);
    f.chains = p.chains_between(x, y);
    for (const auto& c : f.chains) f.labels.push_back(labelling.sequence(c));
    return f;
  });

  ElPosetReport report;
  report.intervals_checked = pairs.size();
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  for (std::size_t k = 0; k < report.failures.size(); ++k)
    if (!report.minimal_failure || report.failures[k].interval_size < report.failures[*report.minimal_failure].interval_size)
      report.minimal_failure = k;
  return report;
}

Chain decreasing_chain(const Poset& p, const EdgeLabelling& labelling, Index x, Index y) {
  if (!p.less(x, y)) throw Error(ErrorCode::NotComparable, "decreasing chain needs x < y");
  std::optional<Chain> found;
  std::size_t count = 0;
  for (const auto& c : p.chains_between(x, y)) {
    if (!classify_chain(labelling, c).decreasing) continue;
    ++count;
    if (!found) found = c;
  }
  if (count != 1)
    throw Error(ErrorCode::NonUniqueDecreasing, std::to_string(count) + " decreasing chains from '" + p.name(x) +
                                                    "' to '" + p.name(y) + "'");
  return *found;
}

EdgeLabelling involution_labelling(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                   const CoverLabeller& labeller, LabelOrder order) {
  return EdgeLabelling::from_covers(bruhat, family_covers(elements, bruhat, labeller), order);
}

namespace {

class LabelSearch {
 public:
  LabelSearch(const std::vector<FullPermutation>& elements, const Poset& p,
              const std::function<bool(const std::vector<EdgeLabel>&)>& visit, std::size_t node_limit)
      : p_(p), covers_(p.covers()), visit_(visit), limit_(node_limit), labels_(covers_.size()) {
    for (auto [lo, hi] : covers_) {
      const FullPermutation& up = elements[hi];
      const int di = difference_index(elements[lo], up);
      std::vector<EdgeLabel> options;
      for (int j : signed_range(up.n()))
        if (j > di && up(di) > up(j)) options.push_back({di, j});
      // Try the type-A covering index first; it is right for most covers.
      const int ci = covering_index_A(elements[lo], up);
      std::stable_partition(options.begin(), options.end(), [&](const EdgeLabel& l) { return l.j == ci; });
      options_.push_back(std::move(options));
    }
    order_.resize(covers_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) order_[k] = k;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const Index ya = covers_[a].second, yb = covers_[b].second;
      return std::pair(p_.height(ya), ya) < std::pair(p_.height(yb), yb);
    });
  }

  LabellingSearch run() {
    step(0);
    return result_;
  }

 private:
  bool step(std::size_t depth) {
    if (depth == order_.size()) {
      ++result_.solutions;
      if (!visit_(labels_)) {
        result_.complete = false;
        return false;
      }
      return true;
    }
    const std::size_t c = order_[depth];
    const Index lower = covers_[c].first;
    const Index upper = covers_[c].second;
    const bool closes = depth + 1 == order_.size() || covers_[order_[depth + 1]].second != upper;
    for (const EdgeLabel& l : options_[c]) {
      if (limit_ != 0 && result_.nodes >= limit_) {
        result_.complete = false;
        return false;
      }
      ++result_.nodes;
      bool clash = false;
      for (std::size_t d = 0; d < depth && !clash; ++d)
        clash = covers_[order_[d]].first == lower && labels_[order_[d]] == l;
      if (clash) continue;
      labels_[c] = l;
      if (closes && !intervals_ok(upper)) continue;
      if (!step(depth + 1)) return false;
    }
    return true;
  }

  // All covers below `y` are labelled once the last cover into `y` is.
  bool intervals_ok(Index y) const {
    std::vector<std::optional<EdgeLabel>> labels(labels_.begin(), labels_.end());
    const EdgeLabelling lab(p_, std::move(labels), LabelOrder::Lex);
    for (Index x = 0; x < p_.size(); ++x) {
      if (!p_.less(x, y)) continue;
      const IntervalReport r = verify_el_interval(p_, lab, x, y);
      if (!r.el_pass() || r.decreasing_chain_count != 1) return false;
    }
    return true;
  }

  const Poset& p_;
  std::vector<IndexPair> covers_;
  const std::function<bool(const std::vector<EdgeLabel>&)>& visit_;
  std::size_t limit_;
  std::vector<std::vector<EdgeLabel>> options_;
  std::vector<std::size_t> order_;
  std::vector<EdgeLabel> labels_;
  LabellingSearch result_;
};

}  // namespace

LabellingSearch search_involution_labellings(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                                             const std::function<bool(const std::vector<EdgeLabel>&)>& visit,
                                             std::size_t node_limit) {
  if (elements.size() != bruhat.size()) throw Error(ErrorCode::SizeMismatch, "one element per poset element expected");
  return LabelSearch(elements, bruhat, visit, node_limit).run();
}

CoverLabeller table_labeller(const std::vector<FullPermutation>& elements, const Poset& bruhat,
                             const std::vector<EdgeLabel>& labels) {
  const auto& covers = bruhat.covers();
  if (labels.size() != covers.size()) throw Error(ErrorCode::SizeMismatch, "one label per cover expected");
  std::map<std::pair<FullPermutation, FullPermutation>, EdgeLabel> table;
  for (std::size_t k = 0; k < covers.size(); ++k)
    table.emplace(std::pair(elements[covers[k].first], elements[covers[k].second]), labels[k]);
  return [table = std::move(table)](const FullPermutation& lo, const FullPermutation& hi) -> std::optional<EdgeLabel> {
    const auto it = table.find({lo, hi});
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

CoverLabeller searched_labeller(int n, std::size_t node_limit) {
  const auto elements = generate_family(Family::SignedInvolutions, n);
  const Poset ib = build_bruhat_poset(elements, OrderDirection::Bruhat, true);
  std::optional<std::vector<EdgeLabel>> found;
  const LabellingSearch s = search_involution_labellings(
      elements, ib,
      [&](const std::vector<EdgeLabel>& labels) {
        found = labels;
        return false;
      },
      node_limit);
  if (!found)
    throw Error(ErrorCode::NoCandidate, "no labelling of the signed involutions for n = " + std::to_string(n) +
                                            " after " + std::to_string(s.nodes) + " search nodes");
  return table_labeller(elements, ib, *found);
}

FpfClosureReport fpf_closure_check(int n, const CoverLabeller& labeller, std::string labeling_name, unsigned jobs) {
  FpfClosureReport report;
  report.n = n;
  report.labeling = std::move(labeling_name);

  const auto elements = generate_family(Family::SignedInvolutions, n);
  const Poset ib = build_bruhat_poset(elements, OrderDirection::Bruhat, true);
  const EdgeLabelling lex = involution_labelling(elements, ib, labeller, LabelOrder::Lex);

  std::vector<IndexPair> all_pairs, fpf_pairs;
  for (Index x = 0; x < ib.size(); ++x)
    for (Index y = 0; y < ib.size(); ++y) {
      if (!ib.less(x, y)) continue;
      all_pairs.emplace_back(x, y);
      if (!elements[x].has_fixed_point() && !elements[y].has_fixed_point()) fpf_pairs.emplace_back(x, y);
    }

  try {
    const auto el = verify_el_poset(ib, lex, jobs);
    auto unique_decreasing = parallel_map(all_pairs.size(), jobs, [&](std::size_t k) {
      const IntervalReport r = verify_el_interval(ib, lex, all_pairs[k].first, all_pairs[k].second);
      return r.decreasing_chain_count == 1;
    });
    report.labelling_validated =
        el.passed() && std::all_of(unique_decreasing.begin(), unique_decreasing.end(), [](bool b) { return b; });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingLabel) throw;
    report.labelling_validated = false;
  }

  auto results = parallel_map(fpf_pairs.size(), jobs, [&](std::size_t k) -> std::optional<FpfClosureFailure> {
    auto [x, y] = fpf_pairs[k];
    FpfClosureFailure f;
    f.lower = ib.name(x);
    f.upper = ib.name(y);
    Chain chain;
    try {
      chain = decreasing_chain(ib, lex, x, y);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonUniqueDecreasing && e.code() != ErrorCode::MissingLabel) throw;
      f.reason = std::string(to_string(e.code()));
      return f;
    }
    for (Index z : chain) f.chain.push_back(ib.name(z));
    for (Index z : chain)
      if (elements[z].has_fixed_point()) {
        f.reason = "decreasing chain leaves the fixed-point-free involutions at '" + ib.name(z) + "'";
        return f;
      }
    return std::nullopt;
  });
  report.pairs_checked = fpf_pairs.size();
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  return report;
}

RankGradednessReport check_rank_gradedness(const Poset& p, const std::vector<int>& rank, unsigned jobs) {
  if (rank.size() != p.size()) throw Error(ErrorCode::SizeMismatch, "one rank per element expected");
  std::vector<IndexPair> pairs;
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (p.less(x, y)) pairs.emplace_back(x, y);
  auto ok = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
    auto [x, y] = pairs[k];
    const auto expected = static_cast<std::size_t>(rank[y] - rank[x]);
    for (const auto& c : p.chains_between(x, y))
      if (c.size() != expected + 1) return false;
    return true;
  });
  RankGradednessReport report;
  report.intervals_checked = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!ok[k]) report.failures.push_back(pairs[k]);
  return report;
}

nlohmann::json to_json(const RankGradednessReport& report, const Poset& p) {
  nlohmann::json failures = nlohmann::json::array();
  for (auto [x, y] : report.failures) failures.push_back({p.name(x), p.name(y)});
  return {{"intervals_checked", report.intervals_checked}, {"failures", failures}};
}

nlohmann::json to_json(const ElPosetReport& report, const Poset& p) {
  auto failure_json = [&](const ElFailure& f) {
    nlohmann::json chains = nlohmann::json::array();
    for (std::size_t k = 0; k < f.chains.size(); ++k) {
      nlohmann::json elems = nlohmann::json::array(), labels = nlohmann::json::array();
      for (Index z : f.chains[k]) elems.push_back(p.name(z));
      for (const auto& l : f.labels[k]) labels.push_back({l.i, l.j});
      chains.push_back({{"elements", elems}, {"labels", labels}});
    }
    return nlohmann::json{{"x", p.name(f.x)}, {"y", p.name(f.y)}, {"reason", f.reason}, {"chains", chains}};
  };
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back(failure_json(f));
  nlohmann::json j{{"intervals_checked", report.intervals_checked}, {"failures", failures}};
  j["minimal_counterexample"] =
      report.minimal_failure ? failure_json(report.failures[*report.minimal_failure]) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const FpfClosureReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"lower", f.lower}, {"upper", f.upper}, {"reason", f.reason}, {"chain", f.chain}});
  return {{"n", report.n},
          {"labeling", report.labeling},
          {"labelling_validated", report.labelling_validated},
          {"pairs_checked", report.pairs_checked},
          {"failures", failures}};
}

}  // namespace pircon
