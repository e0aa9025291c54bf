#include "pircon/matchings.hpp"

#include <algorithm>
#include <numeric>

#include "pircon/error.hpp"
#include "pircon/parallel.hpp"

namespace pircon {

namespace {

constexpr Index kUnset = SIZE_MAX;

void require_size(const Poset& p, const Matching& m) {
  if (m.size() != p.size())
    throw Error(ErrorCode::SizeMismatch, "matching has " + std::to_string(m.size()) + " entries for " +
                                             std::to_string(p.size()) + " elements");
  for (Index x = 0; x < m.size(); ++x)
    if (m(x) >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "matching image out of range");
}

bool adjacent_or_fixed(const Poset& p, Index x, Index mx) {
  return mx == x || p.covered_by(x, mx) || p.covered_by(mx, x);
}

MatchingVerdict check_involution(const Matching& m) {
  for (Index x = 0; x < m.size(); ++x)
    if (m(m(x)) != x) return MatchingVerdict::fail(Violation::NotInvolution, x, m(x));
  return MatchingVerdict::ok();
}

MatchingVerdict check_special_condition(const Poset& p, const Matching& m) {
  for (auto [x, y] : p.covers())
    if (m(x) != y && !p.less(m(x), m(y))) return MatchingVerdict::fail(Violation::SpecialConditionFail, x, y);
  return MatchingVerdict::ok();
}

}  // namespace

bool Matching::has_fixed_point() const {
  for (Index x = 0; x < image_.size(); ++x)
    if (image_[x] == x) return true;
  return false;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::None: return "None";
    case Violation::NotInvolution: return "NotInvolution";
    case Violation::TopNotMatchedDown: return "TopNotMatchedDown";
    case Violation::NotAdjacent: return "NotAdjacent";
    case Violation::SpecialConditionFail: return "SpecialConditionFail";
    case Violation::FixedPointPresent: return "FixedPointPresent";
  }
  return "?";
}

MatchingVerdict check_special_matching(const Poset& p, const Matching& m) {
  require_size(p, m);
  if (auto v = check_involution(m); !v.valid) return v;
  for (Index x = 0; x < m.size(); ++x)
    if (m(x) == x) return MatchingVerdict::fail(Violation::FixedPointPresent, x, x);
  for (Index x = 0; x < m.size(); ++x)
    if (!adjacent_or_fixed(p, x, m(x))) return MatchingVerdict::fail(Violation::NotAdjacent, x, m(x));
  return check_special_condition(p, m);
}

MatchingVerdict check_spm(const Poset& p, const Matching& m) {
  if (!p.top()) throw Error(ErrorCode::MissingTop, "an SPM needs a maximum element");
  require_size(p, m);
  if (auto v = check_involution(m); !v.valid) return v;
  const Index top = *p.top();
  if (!p.covered_by(m(top), top)) return MatchingVerdict::fail(Violation::TopNotMatchedDown, top, m(top));
  for (Index x = 0; x < m.size(); ++x)
    if (!adjacent_or_fixed(p, x, m(x))) return MatchingVerdict::fail(Violation::NotAdjacent, x, m(x));
  return check_special_condition(p, m);
}

LiftingVerdict check_lifting(const Poset& p, const Matching& m) {
  if (!check_spm(p, m).valid) throw Error(ErrorCode::NotAnSpm, "lifting property needs a valid SPM");
  for (Index y = 0; y < p.size(); ++y) {
    if (!p.leq(m(y), y)) continue;
    for (Index x = 0; x < p.size(); ++x) {
      if (!p.less(x, y)) continue;
      if (!p.leq(m(x), y)) return {false, 1, IndexPair{x, y}};
      if (p.leq(m(x), x) && !p.less(m(x), m(y))) return {false, 2, IndexPair{x, y}};
      if (p.leq(x, m(x)) && !p.leq(x, m(y))) return {false, 3, IndexPair{x, y}};
    }
  }
  return {};
}

void for_each_spm(const Poset& p, const std::function<bool(const Matching&)>& visit, SpmSearchOptions options) {
  if (!p.top()) throw Error(ErrorCode::MissingTop, "SPM search needs a maximum element");
  const std::size_t n = p.size();
  const Index top = *p.top();

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (a == top || b == top) return a == top && b != top;
    return p.height(a) > p.height(b);
  });

  std::vector<Index> partner(n, kUnset);

  // Special condition on every cover touching v whose other end is assigned.
  auto consistent = [&](Index v) {
    for (Index u : p.lower_covers(v))
      if (partner[u] != kUnset && partner[u] != v && !p.less(partner[u], partner[v])) return false;
    for (Index y : p.upper_covers(v))
      if (partner[y] != kUnset && partner[v] != y && !p.less(partner[v], partner[y])) return false;
    return true;
  };

  bool stop = false;
  auto step = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == n) {
      Matching m(partner);
      if (check_spm(p, m).valid && (options.allow_fixed_points || !m.has_fixed_point())) stop = !visit(m);
      return;
    }
    const Index x = order[k];
    if (partner[x] != kUnset) {
      self(self, k + 1);
      return;
    }
    std::vector<Index> options_here;
    if (options.allow_fixed_points && x != top) options_here.push_back(x);
    for (Index w : p.lower_covers(x))
      if (partner[w] == kUnset) options_here.push_back(w);
    std::sort(options_here.begin(), options_here.end());

    for (Index c : options_here) {
      // Every upper cover y of x is already matched and M(x) = c != y.
      bool ok = true;
      for (Index y : p.upper_covers(x))
        if (!p.less(c, partner[y])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      partner[x] = c;
      partner[c] = x;
      if (consistent(x) && (c == x || consistent(c))) self(self, k + 1);
      partner[c] = kUnset;
      partner[x] = kUnset;
      if (stop) return;
    }
  };
  step(step, 0);
}

std::optional<Matching> search_spm(const Poset& p, SpmSearchOptions options) {
  std::optional<Matching> found;
  for_each_spm(
      p,
      [&](const Matching& m) {
        found = m;
        return false;
      },
      options);
  return found;
}

Classification classify(const Poset& p, ClassifyOptions options) {
  std::vector<Index> tops;
  for (Index x = 0; x < p.size(); ++x)
    if (!p.is_minimal(x)) tops.push_back(x);

  Classification result;
  result.ideals = parallel_map(tops.size(), options.jobs, [&](std::size_t i) {
    IdealCertificate cert;
    cert.ideal_top = tops[i];
    cert.ideal = p.principal_ideal(tops[i]);
    cert.spm = search_spm(cert.ideal.poset);
    if (cert.spm && options.check_zircon) {
      if (!cert.spm->has_fixed_point())
        cert.special_matching = cert.spm;
      else
        cert.special_matching = search_spm(cert.ideal.poset, {.allow_fixed_points = false});
    }
    return cert;
  });
  bool zircon = true;
  for (const auto& cert : result.ideals) {
    result.pircon = result.pircon && cert.spm.has_value();
    zircon = zircon && cert.special_matching.has_value();
  }
  if (options.check_zircon) result.zircon = zircon;
  return result;
}

nlohmann::json certificate_json(const IdealCertificate& cert, const Poset& host) {
  nlohmann::json j;
  j["ideal_top"] = host.name(cert.ideal_top);
  auto pairs = [&](const std::optional<Matching>& m) {
    if (!m) return nlohmann::json(nullptr);
    nlohmann::json arr = nlohmann::json::array();
    const Poset& ideal = cert.ideal.poset;
    for (Index x = 0; x < m->size(); ++x) arr.push_back({ideal.name(x), ideal.name((*m)(x))});
    return arr;
  };
  j["matching"] = pairs(cert.spm);
  j["special_matching"] = pairs(cert.special_matching);
  return j;
}

nlohmann::json verdict_json(const MatchingVerdict& v, const Poset& p) {
  nlohmann::json j;
  j["valid"] = v.valid;
  j["violation"] = to_string(v.violation);
  if (v.witness)
    j["witness"] = {p.name(v.witness->first), p.name(v.witness->second)};
  else
    j["witness"] = nlohmann::json::array();
  return j;
}

Matching matching_from_json(const nlohmann::json& j, const Poset& p) {
  std::vector<Index> img(p.size());
  std::iota(img.begin(), img.end(), Index{0});
  try {
    for (const auto& pair : j.at("matching")) {
      auto x = p.find(pair.at(0).get<std::string>());
      auto y = p.find(pair.at(1).get<std::string>());
      if (!x || !y) throw Error(ErrorCode::ParseError, "matching names an unknown element");
      img[*x] = *y;
      img[*y] = *x;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matching JSON: ") + e.what());
  }
  return Matching(std::move(img));
}

}  // namespace pircon
