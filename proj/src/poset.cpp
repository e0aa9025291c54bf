#include "pircon/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "pircon/error.hpp"

namespace pircon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MissingTop: return "MissingTop";
    case ErrorCode::NotAnSpm: return "NotAnSpm";
    case ErrorCode::ExtremeNotUnique: return "ExtremeNotUnique";
    case ErrorCode::ClaimViolation: return "ClaimViolation";
    case ErrorCode::EqualInputs: return "EqualInputs";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::NonUniqueDecreasing: return "NonUniqueDecreasing";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "less";
    case Relation::Greater: return "greater";
    case Relation::Equal: return "equal";
    case Relation::Incomparable: return "incomparable";
    case Relation::Covers: return "covers";
    case Relation::CoveredBy: return "covered_by";
  }
  return "?";
}

namespace {

bool rows_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

std::size_t popcount(std::span<const std::uint64_t> a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace

Poset Poset::build(std::vector<std::string> names, std::span<const IndexPair> relations) {
  Poset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.above_ = BitMatrix(n);
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "relation (" + std::to_string(lo) + "," + std::to_string(hi) + ") on " +
                      std::to_string(n) + " elements");
    if (lo != hi) p.above_.set(lo, hi);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    auto rk = p.above_.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.above_.test(i, k)) continue;
      auto ri = p.above_.row(i);
      for (std::size_t w = 0; w < ri.size(); ++w) ri[w] |= rk[w];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (p.above_.test(i, i))
      throw Error(ErrorCode::CycleDetected, "element '" + p.names_[i] + "' lies on a cycle");
  p.finalize();
  return p;
}

void Poset::finalize() {
  const std::size_t n = names_.size();
  below_ = BitMatrix(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (above_.test(x, y)) below_.set(y, x);

  covers_.clear();
  up_.assign(n, {});
  down_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!above_.test(x, y)) continue;
      if (rows_intersect(above_.row(x), below_.row(y))) continue;
      covers_.emplace_back(x, y);
      up_[x].push_back(y);
      down_[y].push_back(x);
    }
  }

  // Heights along a linear extension (fewer elements below comes first).
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::size_t> below_count(n);
  for (std::size_t x = 0; x < n; ++x) below_count[x] = popcount(below_.row(x));
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return below_count[a] < below_count[b]; });
  height_.assign(n, 0);
  for (Index x : order)
    for (Index d : down_[x]) height_[x] = std::max(height_[x], height_[d] + 1);

  top_.reset();
  bottom_.reset();
  auto maxima = maximal_elements();
  auto minima = minimal_elements();
  if (maxima.size() == 1) top_ = maxima.front();
  if (minima.size() == 1) bottom_ = minima.front();
}

void Poset::check_index(Index x) const {
  if (x >= size())
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(x) + " >= " + std::to_string(size()));
}

std::optional<Index> Poset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

bool Poset::covered_by(Index x, Index y) const {
  const auto& u = up_.at(x);
  return std::binary_search(u.begin(), u.end(), y);
}

Relation Poset::order_query(Index x, Index y) const {
  check_index(x);
  check_index(y);
  if (x == y) return Relation::Equal;
  if (covered_by(x, y)) return Relation::CoveredBy;
  if (covered_by(y, x)) return Relation::Covers;
  if (less(x, y)) return Relation::Less;
  if (less(y, x)) return Relation::Greater;
  return Relation::Incomparable;
}

std::optional<std::size_t> Poset::cover_index(Index lo, Index hi) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), IndexPair{lo, hi});
  if (it == covers_.end() || *it != IndexPair{lo, hi}) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<Index> Poset::minimal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Index> Poset::maximal_elements() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

Subposet Poset::induced(std::vector<Index> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Index x : keep) check_index(x);

  Subposet sub;
  Poset& q = sub.poset;
  const std::size_t m = keep.size();
  q.names_.reserve(m);
  for (Index x : keep) q.names_.push_back(names_[x]);
  q.above_ = BitMatrix(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (less(keep[a], keep[b])) q.above_.set(a, b);
  q.finalize();
  sub.embedding = std::move(keep);
  return sub;
}

Subposet Poset::principal_ideal(Index p) const {
  check_index(p);
  std::vector<Index> keep;
  for (Index x = 0; x < size(); ++x)
    if (leq(x, p)) keep.push_back(x);
  return induced(std::move(keep));
}

Subposet Poset::interval(Index x, Index y, bool open) const {
  check_index(x);
  check_index(y);
  if (!leq(x, y))
    throw Error(ErrorCode::NotComparable, "interval endpoints " + names_[x] + " and " + names_[y]);
  std::vector<Index> keep;
  for (Index z = 0; z < size(); ++z) {
    if (!leq(x, z) || !leq(z, y)) continue;
    if (open && (z == x || z == y)) continue;
    keep.push_back(z);
  }
  return induced(std::move(keep));
}

Poset Poset::dual() const {
  Poset d;
  d.names_ = names_;
  d.above_ = below_;
  d.finalize();
  return d;
}

Subposet Poset::proper_part() const {
  if (!top_ || !bottom_) throw Error(ErrorCode::MissingBound, "proper part needs both a top and a bottom");
  std::vector<Index> keep;
  for (Index x = 0; x < size(); ++x)
    if (x != *top_ && x != *bottom_) keep.push_back(x);
  return induced(std::move(keep));
}

std::vector<Chain> Poset::chains_between(Index x, Index y) const {
  check_index(x);
  check_index(y);
  if (!leq(x, y))
    throw Error(ErrorCode::NotComparable, "no chain from " + names_[x] + " to " + names_[y]);
  std::vector<Chain> out;
  Chain current{x};
  auto walk = [&](auto&& self, Index at) -> void {
    if (at == y) {
      out.push_back(current);
      return;
    }
    for (Index next : up_[at]) {
      if (!leq(next, y)) continue;
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  walk(walk, x);
  return out;
}

std::vector<Chain> Poset::maximal_chains() const {
  std::vector<Chain> out;
  Chain current;
  auto walk = [&](auto&& self, Index at) -> void {
    current.push_back(at);
    if (up_[at].empty()) out.push_back(current);
    for (Index next : up_[at]) self(self, next);
    current.pop_back();
  };
  for (Index m : minimal_elements()) walk(walk, m);
  return out;
}

bool Poset::graded() const {
  const std::size_t n = size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return height_[a] < height_[b]; });
  std::vector<std::size_t> shortest(n, 0);
  for (Index x : order) {
    if (down_[x].empty()) continue;
    std::size_t best = SIZE_MAX;
    for (Index d : down_[x]) best = std::min(best, shortest[d] + 1);
    shortest[x] = best;
  }
  std::optional<std::size_t> length;
  for (Index x = 0; x < n; ++x) {
    if (shortest[x] != height_[x]) return false;
    if (!up_[x].empty()) continue;
    if (length && *length != height_[x]) return false;
    length = height_[x];
  }
  return true;
}

bool Poset::operator==(const Poset& other) const {
  return names_ == other.names_ && above_ == other.above_;
}

PosetMap PosetMap::identity(std::size_t n) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  return PosetMap(std::move(img));
}

PosetMap PosetMap::compose(const PosetMap& inner) const {
  if (inner.size() != size()) throw Error(ErrorCode::SizeMismatch, "composing maps of different sizes");
  std::vector<Index> img(size());
  for (Index x = 0; x < size(); ++x) img[x] = image_[inner(x)];
  return PosetMap(std::move(img));
}

PosetMap PosetMap::inverse() const {
  std::vector<Index> img(size(), SIZE_MAX);
  for (Index x = 0; x < size(); ++x) {
    if (image_[x] >= size() || img[image_[x]] != SIZE_MAX)
      throw Error(ErrorCode::NotAutomorphism, "map is not a bijection");
    img[image_[x]] = x;
  }
  return PosetMap(std::move(img));
}

bool PosetMap::is_identity() const {
  for (Index x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::size_t PosetMap::order() const {
  inverse();  // bijectivity check
  std::vector<bool> seen(size(), false);
  std::size_t result = 1;
  for (Index x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Index y = x; !seen[y]; y = image_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool is_automorphism(const Poset& p, const PosetMap& m) {
  if (m.size() != p.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (Index x = 0; x < p.size(); ++x) {
    if (m(x) >= p.size() || hit[m(x)]) return false;
    hit[m(x)] = true;
  }
  // A bijection sending covers to covers permutes the (finite) cover set.
  for (auto [lo, hi] : p.covers())
    if (!p.covered_by(m(lo), m(hi))) return false;
  return true;
}

void require_automorphism(const Poset& p, const PosetMap& m) {
  if (m.size() != p.size())
    throw Error(ErrorCode::NotAutomorphism, "map has " + std::to_string(m.size()) + " entries for " +
                                                std::to_string(p.size()) + " elements");
  if (!is_automorphism(p, m)) throw Error(ErrorCode::NotAutomorphism, "map does not preserve covers bijectively");
}

std::vector<PosetMap> automorphisms(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Index> img(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::vector<PosetMap> out;
  auto fits = [&](Index x, Index y) {
    if (p.height(x) != p.height(y) || p.upper_covers(x).size() != p.upper_covers(y).size() ||
        p.lower_covers(x).size() != p.lower_covers(y).size())
      return false;
    for (Index z = 0; z < x; ++z) {
      if (p.covered_by(z, x) != p.covered_by(img[z], y)) return false;
      if (p.covered_by(x, z) != p.covered_by(y, img[z])) return false;
    }
    return true;
  };
  auto assign = [&](auto&& self, Index x) -> void {
    if (x == n) {
      out.emplace_back(img);
      return;
    }
    for (Index y = 0; y < n; ++y) {
      if (used[y] || !fits(x, y)) continue;
      used[y] = true;
      img[x] = y;
      self(self, x + 1);
      used[y] = false;
    }
    img[x] = SIZE_MAX;
  };
  assign(assign, 0);
  return out;
}

Subposet fixed_subposet(const Poset& p, const PosetMap& tau) {
  require_automorphism(p, tau);
  std::vector<Index> keep;
  for (Index x = 0; x < p.size(); ++x)
    if (tau(x) == x) keep.push_back(x);
  return p.induced(std::move(keep));
}

PosetMap restrict_map(const PosetMap& m, const Subposet& sub) {
  std::unordered_map<Index, Index> local;
  for (Index a = 0; a < sub.embedding.size(); ++a) local.emplace(sub.embedding[a], a);
  std::vector<Index> img(sub.embedding.size());
  for (Index a = 0; a < sub.embedding.size(); ++a) {
    auto it = local.find(m(sub.embedding[a]));
    if (it == local.end()) throw Error(ErrorCode::NotAutomorphism, "subposet is not stable under the map");
    img[a] = it->second;
  }
  return PosetMap(std::move(img));
}

nlohmann::json to_json(const Poset& p, const std::string& name) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return {{"name", name}, {"elements", p.names()}, {"covers", covers}};
}

Poset poset_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    auto pairs = j.at("covers").get<std::vector<std::pair<Index, Index>>>();
    return Poset::build(std::move(names), pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("poset JSON: ") + e.what());
  }
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (Index x = 0; x < p.size(); ++x) os << "  n" << x << " [label=\"" << p.name(x) << "\"];\n";
  for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pircon
