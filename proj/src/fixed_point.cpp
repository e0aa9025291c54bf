#include "pircon/fixed_point.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pircon/error.hpp"
#include "pircon/parallel.hpp"

namespace pircon {

namespace {

void claim(bool ok, std::size_t& counter, const std::string& what) {
  ++counter;
  if (!ok) throw Error(ErrorCode::ClaimViolation, what);
}

}  // namespace

ConjugatedFamily conjugated_spms(const Poset& p, const Matching& m, const PosetMap& tau) {
  require_automorphism(p, tau);
  if (!check_spm(p, m).valid) throw Error(ErrorCode::NotAnSpm, "conjugation needs a valid SPM");

  ConjugatedFamily family;
  family.order = tau.order();
  PosetMap power = tau;  // τ^i
  for (std::size_t i = 1; i <= family.order; ++i) {
    const PosetMap inv = power.inverse();
    std::vector<Index> img(p.size());
    for (Index x = 0; x < p.size(); ++x) img[x] = power(m(inv(x)));
    Matching mi(std::move(img));
    for (Index x = 0; x < p.size(); ++x)
      if (power(m(x)) != mi(power(x))) throw Error(ErrorCode::NotAnSpm, "conjugation identity fails");
    if (!check_spm(p, mi).valid) throw Error(ErrorCode::NotAnSpm, "conjugate M_" + std::to_string(i) + " is not an SPM");
    family.matchings.push_back(std::move(mi));
    power = tau.compose(power);
  }
  return family;
}

OrbitRecord orbit(const Poset& p, const ConjugatedFamily& family, Index x) {
  std::vector<bool> seen(p.size(), false);
  std::deque<Index> queue{x};
  seen.at(x) = true;
  OrbitRecord rec;
  while (!queue.empty()) {
    const Index a = queue.front();
    queue.pop_front();
    rec.members.push_back(a);
    for (const auto& mi : family.matchings) {
      const Index b = mi(a);
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  std::sort(rec.members.begin(), rec.members.end());

  std::vector<Index> minima, maxima;
  for (Index a : rec.members) {
    bool is_min = true, is_max = true;
    for (Index b : rec.members) {
      if (p.less(b, a)) is_min = false;
      if (p.less(a, b)) is_max = false;
    }
    if (is_min) minima.push_back(a);
    if (is_max) maxima.push_back(a);
  }
  if (minima.size() != 1 || maxima.size() != 1)
    throw Error(ErrorCode::ExtremeNotUnique, "orbit of '" + p.name(x) + "' has " + std::to_string(minima.size()) +
                                                 " minimal and " + std::to_string(maxima.size()) + " maximal members");
  rec.minimum = minima.front();
  rec.maximum = maxima.front();
  return rec;
}

InducedSpm induced_spm(const Poset& p, const Matching& m, const PosetMap& tau, InducedSpmOptions options) {
  if (!p.top()) throw Error(ErrorCode::MissingTop, "induced SPM needs a maximum element");
  const ConjugatedFamily family = conjugated_spms(p, m, tau);

  const std::size_t n = p.size();
  std::vector<Index> lo(n), hi(n);
  std::vector<bool> done(n, false);
  for (Index x = 0; x < n; ++x) {
    if (done[x]) continue;
    const OrbitRecord rec = orbit(p, family, x);
    for (Index a : rec.members) {
      lo[a] = rec.minimum;
      hi[a] = rec.maximum;
      done[a] = true;
    }
  }

  InducedSpm out;
  out.fixed = fixed_subposet(p, tau);
  std::unordered_map<Index, Index> local;
  for (Index a = 0; a < out.fixed.embedding.size(); ++a) local.emplace(out.fixed.embedding[a], a);

  std::size_t& checked = out.claims_checked;
  // Extremes of a fixed orbit are fixed; without this M° is not defined.
  for (Index x : out.fixed.embedding) {
    claim(tau(lo[x]) == lo[x] && tau(hi[x]) == hi[x], checked,
          "extremes of C(" + p.name(x) + ") are not fixed by the automorphism");
  }

  if (options.check_claims) {
    for (Index x = 0; x < n; ++x)
      claim(lo[tau(x)] == tau(lo[x]) && hi[tau(x)] == tau(hi[x]), checked,
            "automorphism does not permute orbits at '" + p.name(x) + "'");
    for (Index x : out.fixed.embedding)
      claim(x == lo[x] || x == hi[x], checked, "fixed '" + p.name(x) + "' is neither extreme of its orbit");
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (p.leq(lo[x], hi[y]))
          claim(p.leq(lo[x], lo[y]) && p.leq(hi[x], hi[y]), checked,
                "orbit extremes of '" + p.name(x) + "' and '" + p.name(y) + "' are not monotone");
    for (Index x : out.fixed.embedding) {
      const Index a = local.at(lo[x]), b = local.at(hi[x]);
      claim(a == b || out.fixed.poset.covered_by(a, b), checked,
            "extremes of C(" + p.name(x) + ") are not adjacent in the fixed subposet");
    }
  }

  std::vector<Index> img(out.fixed.embedding.size());
  for (Index a = 0; a < img.size(); ++a) {
    const Index x = out.fixed.embedding[a];
    img[a] = local.at(x == lo[x] ? hi[x] : lo[x]);
  }
  out.matching = Matching(std::move(img));
  return out;
}

FixedPirconReport fixed_pircon_verify(const Poset& p, const PosetMap& tau, const Classification& classification,
                                      InducedSpmOptions options, unsigned jobs) {
  const Subposet fixed = fixed_subposet(p, tau);
  std::vector<Index> tops;
  for (Index a = 0; a < fixed.embedding.size(); ++a)
    if (!fixed.poset.is_minimal(a)) tops.push_back(fixed.embedding[a]);

  std::unordered_map<Index, const IdealCertificate*> certs;
  for (const auto& c : classification.ideals) certs.emplace(c.ideal_top, &c);

  FixedPirconReport report;
  report.ideals = parallel_map(tops.size(), jobs, [&](std::size_t i) {
    const Index top = tops[i];
    auto it = certs.find(top);
    if (it == certs.end() || !it->second->spm)
      throw Error(ErrorCode::NotAnSpm, "no SPM certificate for the ideal of '" + p.name(top) + "'");
    const IdealCertificate& cert = *it->second;
    const PosetMap local_tau = restrict_map(tau, cert.ideal);
    const InducedSpm induced = induced_spm(cert.ideal.poset, *cert.spm, local_tau, options);

    FixedIdealReport r;
    r.ideal_top = top;
    r.fixed_count = induced.fixed.poset.size();
    r.claims_checked = induced.claims_checked;
    r.spm_found = check_spm(induced.fixed.poset, induced.matching).valid;
    r.lifting_holds = r.spm_found && check_lifting(induced.fixed.poset, induced.matching).holds;
    return r;
  });
  for (const auto& r : report.ideals) report.pircon_confirmed = report.pircon_confirmed && r.spm_found;
  return report;
}

nlohmann::json to_json(const FixedPirconReport& report, const Poset& host) {
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& r : report.ideals)
    ideals.push_back({{"ideal_top", host.name(r.ideal_top)},
                      {"fixed_count", r.fixed_count},
                      {"spm_found", r.spm_found},
                      {"lifting_holds", r.lifting_holds},
                      {"claims_checked", r.claims_checked}});
  return {{"pircon_confirmed", report.pircon_confirmed}, {"ideals", ideals}};
}

}  // namespace pircon
