#include "pircon/run.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pircon/cover_labels.hpp"
#include "pircon/error.hpp"
#include "pircon/fixed_point.hpp"
#include "pircon/fixtures.hpp"
#include "pircon/matchings.hpp"
#include "pircon/parallel.hpp"
#include "pircon/shellability.hpp"
#include "pircon/topology.hpp"

namespace pircon {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Dot: return "dot";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "dot") return OutputFormat::Dot;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::InvalidConfig, "unknown format '" + std::string(name) + "'");
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gen", "check-spm", "pircon", "fixed-spm", "el-verify", "homology", "stats"};
  return names;
}

namespace {

Family default_family(const std::string& command) {
  if (command == "fixed-spm") return Family::FpfInvolutions;
  if (command == "stats") return Family::SignedInvolutions;
  return Family::FpfSignedInvolutions;
}

OrderDirection default_order(const std::string& command) {
  return command == "pircon" || command == "fixed-spm" ? OrderDirection::Dual : OrderDirection::Bruhat;
}

OutputFormat default_format(const std::string& command) {
  return command == "stats" ? OutputFormat::Csv : OutputFormat::Json;
}

struct Resolved {
  Family family;
  OrderDirection order;
  OutputFormat format;
};

Resolved resolve(const RunConfig& c) {
  return {c.family.value_or(default_family(c.command)), c.order.value_or(default_order(c.command)),
          c.format.value_or(default_format(c.command))};
}

bool uses_poset_file(const RunConfig& c) {
  return !c.poset_file.empty() && (c.command == "check-spm" || c.command == "pircon");
}

void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "'" + path.string() + "': " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Collects every file written under <out_dir>/<command>.
class Artifacts {
 public:
  explicit Artifacts(fs::path root) : root_(std::move(root)) {}

  const fs::path& root() const { return root_; }

  void write(const fs::path& relative, const std::string& content) {
    const fs::path path = root_ / relative;
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write '" + path.string() + "'");
    out << content;
    files_[relative.generic_string()] = content.size();
  }

  json listing() const {
    json out = json::array();
    for (const auto& [path, bytes] : files_) out.push_back({{"path", path}, {"bytes", bytes}});
    return out;
  }

 private:
  fs::path root_;
  std::map<std::string, std::size_t> files_;
};

struct Finding {
  std::string invariant;
  json details;
};

/// Writes <dir>/certificate.json when there is anything to report.
bool certify(Artifacts& out, const std::string& dir, const std::string& command, const std::vector<Finding>& found) {
  if (found.empty()) return true;
  json list = json::array();
  for (const auto& v : found) list.push_back({{"invariant", v.invariant}, {"details", v.details}});
  out.write(fs::path(dir) / "certificate.json", dump({{"command", command}, {"scope", dir}, {"violations", list}}));
  return false;
}

CoverLabeller labeller_for(const RunConfig& c, int n) {
  if (c.labeling == "from-file") return file_labeller(read_json_file(c.labels_file));
  if (c.labeling == "searched") return searched_labeller(n);
  return formula_labeller(parse_label_variant(c.labeling));
}

std::string poset_name(Family f, int n, OrderDirection d) {
  return std::string(to_string(f)) + "-" + std::to_string(n) + (d == OrderDirection::Dual ? "-dual" : "");
}

struct FamilyPoset {
  std::vector<FullPermutation> elements;
  Poset poset;
};

FamilyPoset family_poset(Family f, int n, OrderDirection d) {
  auto elements = generate_family(f, n);
  Poset p = build_bruhat_poset(elements, d, is_signed_family(f));
  return {std::move(elements), std::move(p)};
}

std::vector<int> signed_ranks(const std::vector<FullPermutation>& elements) {
  std::vector<int> rank;
  for (const auto& e : elements) rank.push_back(*stats(SignedPermutation::from_full(e)).rank);
  return rank;
}

json classification_json(const Classification& cls, const Poset& p) {
  json ideals = json::array();
  for (const auto& cert : cls.ideals) ideals.push_back(certificate_json(cert, p));
  return {{"pircon", cls.pircon}, {"zircon", cls.zircon ? json(*cls.zircon) : json(nullptr)}, {"ideals", ideals}};
}

/// Lifting failures among the SPMs a classification found.
json lifting_failures(const Classification& cls, const Poset& p) {
  json out = json::array();
  for (const auto& cert : cls.ideals) {
    if (!cert.spm) continue;
    const LiftingVerdict v = check_lifting(cert.ideal.poset, *cert.spm);
    if (v.holds) continue;
    json w = nullptr;
    if (v.witness) w = {cert.ideal.poset.name(v.witness->first), cert.ideal.poset.name(v.witness->second)};
    out.push_back({{"ideal_top", p.name(cert.ideal_top)}, {"part", v.part}, {"witness", w}});
  }
  return out;
}

class Runner {
 public:
  Runner(const RunConfig& config, Artifacts& out, std::ostream& log)
      : c_(config), r_(resolve(config)), out_(out), log_(log) {}

  bool gen(int n) {
    const std::string dir = std::to_string(n);
    const FamilyPoset fp = family_poset(r_.family, n, r_.order);
    out_.write(fs::path(dir) / "elements.json", dump(fp.poset.names()));
    const std::string name = poset_name(r_.family, n, r_.order);
    switch (r_.format) {
      case OutputFormat::Json: out_.write(fs::path(dir) / "poset.json", dump(to_json(fp.poset, name))); break;
      case OutputFormat::Dot: out_.write(fs::path(dir) / "poset.dot", to_dot(fp.poset, name)); break;
      case OutputFormat::Csv: out_.write(fs::path(dir) / "covers.csv", covers_csv(r_.family, n)); break;
    }
    log_ << "gen " << name << ": " << fp.poset.size() << " elements, " << fp.poset.covers().size() << " covers\n";
    return true;
  }

  bool check_spm_file() {
    const Poset p = poset_from_json(read_json_file(c_.poset_file));
    const std::string dir = "input";
    std::vector<Finding> found;
    json report{{"poset", p.size()}};
    std::optional<Matching> m;
    if (!c_.matching_file.empty()) {
      m = matching_from_json(read_json_file(c_.matching_file), p);
      const MatchingVerdict v = check_spm(p, *m);
      report["spm"] = verdict_json(v, p);
      report["special_matching"] = verdict_json(check_special_matching(p, *m), p);
      if (!v.valid) {
        found.push_back({"special-partial-matching", report["spm"]});
        m.reset();
      }
    } else {
      m = search_spm(p);
      report["spm_found"] = m.has_value();
      if (m) {
        json pairs = json::array();
        for (Index x = 0; x < p.size(); ++x)
          if ((*m)(x) > x) pairs.push_back({p.name(x), p.name((*m)(x))});
        report["matching"] = pairs;
      }
    }
    if (m) {
      const LiftingVerdict lv = check_lifting(p, *m);
      json w = nullptr;
      if (lv.witness) w = {p.name(lv.witness->first), p.name(lv.witness->second)};
      report["lifting"] = {{"holds", lv.holds}, {"part", lv.part}, {"witness", w}};
      if (!lv.holds) found.push_back({"lifting-property", report["lifting"]});
    }
    out_.write(fs::path(dir) / "check.json", dump(report));
    log_ << "check-spm " << c_.poset_file.filename().string() << ": " << (found.empty() ? "ok" : "violations") << "\n";
    return certify(out_, dir, c_.command, found);
  }

  bool check_spm_suite(int n) {
    const std::string dir = std::to_string(n);
    std::vector<Poset> posets = posets_with_top(static_cast<std::size_t>(n));
    const std::size_t exhaustive = posets.size();
    std::mt19937_64 rng(c_.seed);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    for (std::size_t k = 0; k < c_.random_posets; ++k) {
      const std::size_t s = size(rng);
      posets.push_back(random_poset_with_top(s, 0.4, rng));
    }
    auto tallies = parallel_map(posets.size(), c_.jobs, [&](std::size_t k) {
      return check_fixed_point_theorem(posets[k], 0, c_.strict_claims);
    });
    TheoremTally total;
    for (const auto& t : tallies) total.merge(t);
    json report{{"max_size", n},
                {"exhaustive_posets", exhaustive},
                {"random_posets", c_.random_posets},
                {"seed", c_.seed},
                {"spms", total.spms},
                {"automorphisms", total.automorphisms},
                {"pairs", total.pairs},
                {"claims_checked", total.claims_checked},
                {"induced_failures", total.induced_failures},
                {"claim_failures", total.claim_failures},
                {"lifting_failures", total.lifting_failures},
                {"messages", total.messages}};
    out_.write(fs::path(dir) / "suite.json", dump(report));
    log_ << "check-spm suite n=" << n << ": " << total.posets << " posets, " << total.spms << " SPMs, " << total.pairs
         << " (SPM, automorphism) pairs\n";
    std::vector<Finding> found;
    if (total.induced_failures) found.push_back({"induced-spm", {{"count", total.induced_failures}}});
    if (total.claim_failures) found.push_back({"fixed-point-claims", {{"count", total.claim_failures}}});
    if (total.lifting_failures) found.push_back({"lifting-property", {{"count", total.lifting_failures}}});
    return certify(out_, dir, c_.command, found);
  }

  bool pircon_file() {
    const Poset p = poset_from_json(read_json_file(c_.poset_file));
    return pircon_report(p, "input", true, c_.poset_file.filename().string());
  }

  bool pircon(int n) {
    const FamilyPoset fp = family_poset(r_.family, n, r_.order);
    return pircon_report(fp.poset, std::to_string(n), is_signed_family(r_.family), poset_name(r_.family, n, r_.order));
  }

  bool fixed_spm(int n) {
    const std::string dir = std::to_string(n);
    const FamilyPoset fp = family_poset(r_.family, n, r_.order);
    const Poset& p = fp.poset;
    const PosetMap tau = conjugation_map(fp.elements);
    require_automorphism(p, tau);
    std::vector<Finding> found;

    const Classification cls = classify(p, {.check_zircon = false, .jobs = c_.jobs});
    FixedPirconReport report;
    try {
      report = fixed_pircon_verify(p, tau, cls, {.check_claims = c_.strict_claims}, c_.jobs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClaimViolation && e.code() != ErrorCode::ExtremeNotUnique) throw;
      found.push_back({"fixed-point-claims", {{"message", e.what()}}});
    }

    // P^τ must be the fixed-point-free signed involutions in the same order.
    const Subposet fixed = fixed_subposet(p, tau);
    const Poset fb = build_bruhat_poset(generate_signed_family(Family::FpfSignedInvolutions, n), r_.order);
    std::vector<Index> to_fb;
    bool isomorphic = fixed.poset.size() == fb.size();
    for (Index a = 0; a < fixed.poset.size() && isomorphic; ++a) {
      auto k = fb.find(SignedPermutation::from_full(fp.elements[fixed.embedding[a]]).to_string());
      if (!k) isomorphic = false;
      else to_fb.push_back(*k);
    }
    for (Index a = 0; a < fixed.poset.size() && isomorphic; ++a)
      for (Index b = 0; b < fixed.poset.size() && isomorphic; ++b)
        if (fixed.poset.less(a, b) != fb.less(to_fb[a], to_fb[b])) isomorphic = false;

    json j = to_json(report, p);
    j["family"] = std::string(to_string(r_.family));
    j["n"] = n;
    j["order"] = std::string(to_string(r_.order));
    j["size"] = p.size();
    j["pircon"] = cls.pircon;
    j["fixed_count"] = fixed.poset.size();
    j["fixed_is_fpf_signed_involutions"] = isomorphic;
    j["claims_checked_flag"] = c_.strict_claims;
    out_.write(fs::path(dir) / "fixed-spm.json", dump(j));

    if (!cls.pircon) found.push_back({"pircon", {{"poset", poset_name(r_.family, n, r_.order)}}});
    if (!report.pircon_confirmed) {
      json bad = json::array();
      for (const auto& ideal : report.ideals)
        if (!ideal.spm_found) bad.push_back(p.name(ideal.ideal_top));
      found.push_back({"induced-spm", {{"ideal_tops", bad}}});
    }
    json lifting = json::array();
    for (const auto& ideal : report.ideals)
      if (ideal.spm_found && !ideal.lifting_holds) lifting.push_back(p.name(ideal.ideal_top));
    if (!lifting.empty()) found.push_back({"lifting-property", {{"ideal_tops", lifting}}});
    if (!isomorphic) found.push_back({"fixed-subposet", {{"fixed_count", fixed.poset.size()}, {"expected", fb.size()}}});

    log_ << "fixed-spm n=" << n << ": |P| = " << p.size() << ", |P^tau| = " << fixed.poset.size() << ", "
         << report.ideals.size() << " fixed ideals, " << (found.empty() ? "confirmed" : "violations") << "\n";
    return certify(out_, dir, c_.command, found);
  }

  bool el_verify(int n) {
    const std::string dir = std::to_string(n);
    const FamilyPoset fp = family_poset(r_.family, n, OrderDirection::Bruhat);
    const bool fpf = r_.family == Family::FpfSignedInvolutions || r_.family == Family::FpfInvolutions;
    const LabelOrder order = fpf ? LabelOrder::ReversedLex : LabelOrder::Lex;
    const CoverLabeller labeller = labeller_for(c_, n);
    std::vector<Finding> found;

    json el{{"family", std::string(to_string(r_.family))},
            {"n", n},
            {"labeling", c_.labeling},
            {"label_order", order == LabelOrder::Lex ? "lex" : "reversed-lex"}};
    try {
      const EdgeLabelling labelling = involution_labelling(fp.elements, fp.poset, labeller, order);
      const ElPosetReport report = verify_el_poset(fp.poset, labelling, c_.jobs);
      el.update(to_json(report, fp.poset));
      if (!report.passed()) found.push_back({"el-labelling", el["minimal_counterexample"]});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingLabel) throw;
      el["error"] = e.what();
      found.push_back({"edge-labelling", {{"message", e.what()}}});
    }
    out_.write(fs::path(dir) / "el.json", dump(el));

    if (is_signed_family(r_.family)) {
      const RankGradednessReport g = check_rank_gradedness(fp.poset, signed_ranks(fp.elements), c_.jobs);
      const json gj = to_json(g, fp.poset);
      out_.write(fs::path(dir) / "gradedness.json", dump(gj));
      if (!g.passed()) found.push_back({"rank-gradedness", gj["failures"]});
    }
    if (r_.family == Family::FpfSignedInvolutions) {
      const FpfClosureReport closure = fpf_closure_check(n, labeller, c_.labeling, c_.jobs);
      const json cj = to_json(closure);
      out_.write(fs::path(dir) / "fpf-closure.json", dump(cj));
      if (!closure.labelling_validated)
        found.push_back({"validated-labelling", {{"labeling", c_.labeling}, {"family", "signed-inv"}}});
      if (!closure.failures.empty()) found.push_back({"fpf-closure", cj["failures"]});
    }

    log_ << "el-verify " << to_string(r_.family) << " n=" << n << " (" << c_.labeling << "): "
         << (found.empty() ? "passed" : std::to_string(found.size()) + " violated invariant(s)") << "\n";
    return certify(out_, dir, c_.command, found);
  }

  bool homology(int n) {
    const std::string dir = std::to_string(n);
    const FamilyPoset fp = family_poset(Family::FpfSignedInvolutions, n, OrderDirection::Bruhat);
    const Subposet proper = fp.poset.proper_part();
    const SimplicialComplex k = order_complex(proper.poset);
    const HomologySignature h = homology_z2(k);
    const long chi = euler_characteristic(k);
    const int expected = expected_dimension(n);
    const Signature sig = ball_sphere_signature(h, expected);

    if (r_.format == OutputFormat::Csv) {
      std::ostringstream csv;
      csv << "n,dim";
      for (int d = 0; d <= h.dimension; ++d) csv << ",betti_" << d;
      csv << ",verdict\n" << n << "," << h.dimension;
      for (int d = 0; d <= h.dimension; ++d) csv << "," << h.betti(d);
      csv << "," << to_string(sig) << "\n";
      out_.write(fs::path(dir) / "homology.csv", csv.str());
    } else {
      json j{{"n", n},
             {"proper_part_size", proper.poset.size()},
             {"facets", k.facets().size()},
             {"dimension", h.dimension},
             {"expected_dimension", expected},
             {"reduced_betti", h.reduced_betti},
             {"euler_characteristic", chi},
             {"verdict", to_string(sig)}};
      out_.write(fs::path(dir) / "homology.json", dump(j));
    }
    log_ << "homology n=" << n << ": dim " << h.dimension << ", chi " << chi << ", " << to_string(sig) << "\n";

    std::vector<Finding> found;
    if (sig != Signature::BallConsistent)
      found.push_back({"ball-signature", {{"dimension", h.dimension}, {"expected_dimension", expected}, {"reduced_betti", h.reduced_betti}}});
    if (chi - 1 != h.alternating_sum()) found.push_back({"euler-betti", {{"euler_characteristic", chi}}});
    return certify(out_, dir, c_.command, found);
  }

  bool stats_table(int n) {
    const std::string dir = std::to_string(n);
    const auto elements = generate_signed_family(r_.family, n);
    std::ostringstream csv;
    csv << "n,window,inv,neg,len,dna,rho\n";
    json rows = json::array();
    std::optional<int> rank_w0, rank_hat0;
    const SignedPermutation w0 = longest_element(n);
    const SignedPermutation hat0 = fpf_bottom(n);
    for (const auto& s : elements) {
      const PermStats st = stats(s);
      csv << n << ",\"" << s.to_string() << "\"," << st.inv << "," << st.neg << "," << st.length << "," << st.dna << ",";
      if (st.rank) csv << *st.rank;
      csv << "\n";
      rows.push_back({{"window", s.to_string()},
                      {"inv", st.inv},
                      {"neg", st.neg},
                      {"len", st.length},
                      {"dna", st.dna},
                      {"rho", st.rank ? json(*st.rank) : json(nullptr)}});
      if (s == w0) rank_w0 = st.rank;
      if (s == hat0) rank_hat0 = st.rank;
    }
    if (r_.format == OutputFormat::Json)
      out_.write(fs::path(dir) / "stats.json", dump({{"n", n}, {"family", std::string(to_string(r_.family))}, {"rows", rows}}));
    else
      out_.write(fs::path(dir) / "stats.csv", csv.str());

    std::vector<Finding> found;
    const int top = (n * n + n) / 2;
    const int bottom = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    if (rank_w0 && *rank_w0 != top) found.push_back({"rank-of-w0", {{"rho", *rank_w0}, {"expected", top}}});
    if (rank_hat0 && *rank_hat0 != bottom) found.push_back({"rank-of-fpf-bottom", {{"rho", *rank_hat0}, {"expected", bottom}}});
    log_ << "stats " << to_string(r_.family) << " n=" << n << ": " << elements.size() << " elements";
    if (rank_w0) log_ << ", rho(w0) = " << *rank_w0;
    log_ << "\n";
    return certify(out_, dir, c_.command, found);
  }

 private:
  std::string covers_csv(Family f, int n) {
    const FamilyPoset bruhat = family_poset(f, n, OrderDirection::Bruhat);
    const auto covers = family_covers(bruhat.elements, bruhat.poset, labeller_for(c_, n));
    std::ostringstream csv;
    csv << "lower_window,upper_window,di,j_candidate,covering_value\n";
    for (const auto& rec : covers) {
      csv << '"' << bruhat.poset.name(rec.lower) << "\",\"" << bruhat.poset.name(rec.upper) << "\","
          << difference_index(bruhat.elements[rec.lower], bruhat.elements[rec.upper]) << ",";
      if (rec.label) csv << rec.label->j;
      csv << "," << rec.covering_value << "\n";
    }
    return csv.str();
  }

  bool pircon_report(const Poset& p, const std::string& dir, bool check_zircon, const std::string& name) {
    const Classification cls = classify(p, {.check_zircon = check_zircon, .jobs = c_.jobs});
    json j = classification_json(cls, p);
    j["poset"] = name;
    j["size"] = p.size();
    const json lifting = lifting_failures(cls, p);
    j["lifting_failures"] = lifting;
    out_.write(fs::path(dir) / "classification.json", dump(j));

    std::vector<Finding> found;
    if (!cls.pircon) {
      json missing = json::array();
      for (const auto& cert : cls.ideals)
        if (!cert.spm) missing.push_back(p.name(cert.ideal_top));
      found.push_back({"pircon", {{"ideal_tops_without_spm", missing}}});
    }
    if (!lifting.empty()) found.push_back({"lifting-property", lifting});
    log_ << "pircon " << name << ": " << (cls.pircon ? "pircon" : "not a pircon");
    if (cls.zircon) log_ << (*cls.zircon ? ", zircon" : ", not a zircon");
    log_ << "\n";
    return certify(out_, dir, c_.command, found);
  }

  const RunConfig& c_;
  Resolved r_;
  Artifacts& out_;
  std::ostream& log_;
};

json config_json(const RunConfig& c) {
  const Resolved r = resolve(c);
  return {{"command", c.command},
          {"n", c.n},
          {"n_max", c.n_max.value_or(c.n)},
          {"family", std::string(to_string(r.family))},
          {"order", std::string(to_string(r.order))},
          {"labeling", c.labeling},
          {"labels_file", c.labels_file.generic_string()},
          {"format", std::string(to_string(r.format))},
          {"seed", c.seed},
          {"strict_claims", c.strict_claims},
          {"random_posets", c.random_posets},
          {"poset_file", c.poset_file.generic_string()},
          {"matching_file", c.matching_file.generic_string()}};
}

}  // namespace

void validate(const RunConfig& c) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) invalid("unknown command '" + c.command + "'");
  const int lo = c.n;
  const int hi = c.n_max.value_or(c.n);
  if (lo < 1) invalid("n must be at least 1");
  if (hi < lo) invalid("n-max is below n");
  if (c.jobs < 1) invalid("jobs must be at least 1");
  if (c.labeling != "ci-candidate" && c.labeling != "cv-candidate" && c.labeling != "from-file" &&
      c.labeling != "searched")
    invalid("unknown labeling '" + c.labeling + "'");
  if (c.labeling == "from-file" && c.labels_file.empty()) invalid("from-file labeling needs a labels file");
  if (!c.matching_file.empty() && c.poset_file.empty()) invalid("a matching file needs a poset file");

  const Resolved r = resolve(c);
  if (c.command == "check-spm") {
    if (c.poset_file.empty() && hi > 7) invalid("the exhaustive poset suite is capped at 7 elements");
    return;
  }
  if (uses_poset_file(c)) return;
  if (is_signed_family(r.family)) {
    if (hi > kMaxSignedN) invalid("n is capped at " + std::to_string(kMaxSignedN) + " for signed families");
  } else if (2 * hi > kMaxFullDegree) {
    invalid("2n is capped at " + std::to_string(kMaxFullDegree) + " for families inside S_2n");
  }
  if (c.command == "fixed-spm" && r.family != Family::FpfInvolutions)
    invalid("fixed-spm runs on the fixed-point-free involutions of S_2n");
  if ((c.command == "stats" || c.command == "homology") && !is_signed_family(r.family))
    invalid(c.command + " needs a signed family");
  if (c.command == "homology" && r.family != Family::FpfSignedInvolutions)
    invalid("homology runs on the fixed-point-free signed involutions");
  if (c.command == "homology" && lo < 2) invalid("homology needs n >= 2");
  if (c.labeling == "searched" && (c.command == "el-verify" || c.command == "gen")) {
    if (!is_signed_family(r.family)) invalid("the searched labelling is defined on signed involutions");
    if (hi > kMaxSearchedN) invalid("the searched labelling is capped at n = " + std::to_string(kMaxSearchedN));
  }
  if (c.command == "el-verify" && r.order != OrderDirection::Bruhat) invalid("el-verify labels the Bruhat order");
  if (r.format == OutputFormat::Dot && c.command != "gen") invalid("dot output is only available for gen");
  if (r.format == OutputFormat::Csv && c.command != "gen" && c.command != "stats" && c.command != "homology")
    invalid("csv output is only available for gen, stats and homology");
}

int run(const RunConfig& config, std::ostream& log) {
  const bool known = std::find(command_names().begin(), command_names().end(), config.command) != command_names().end();
  Artifacts out(known ? config.out_dir / config.command : config.out_dir);
  json manifest{{"config", config_json(config)}};
  int status = kExitOk;
  try {
    validate(config);
    Runner runner(config, out, log);
    bool ok = true;
    if (config.command == "check-spm" && !config.poset_file.empty()) {
      ok = runner.check_spm_file();
    } else if (config.command == "pircon" && !config.poset_file.empty()) {
      ok = runner.pircon_file();
    } else {
      for (int n = config.n; n <= config.n_max.value_or(config.n); ++n) {
        bool step = true;
        if (config.command == "gen") step = runner.gen(n);
        else if (config.command == "check-spm") step = runner.check_spm_suite(n);
        else if (config.command == "pircon") step = runner.pircon(n);
        else if (config.command == "fixed-spm") step = runner.fixed_spm(n);
        else if (config.command == "el-verify") step = runner.el_verify(n);
        else if (config.command == "homology") step = runner.homology(n);
        else if (config.command == "stats") step = runner.stats_table(n);
        ok = ok && step;
      }
    }
    status = ok ? kExitOk : kExitVerificationFailed;
    manifest["status"] = ok ? "passed" : "failed";
  } catch (const Error& e) {
    out.write("error.json", dump({{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}));
    log << "error: " << e.what() << "\n";
    manifest["status"] = "error";
    status = kExitError;
  } catch (const std::exception& e) {
    out.write("error.json", dump({{"error", {{"code", "Internal"}, {"message", e.what()}}}}));
    log << "error: " << e.what() << "\n";
    manifest["status"] = "error";
    status = kExitError;
  }
  manifest["artifacts"] = out.listing();
  try {
    out.write("manifest.json", dump(manifest));
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}

}  // namespace pircon
