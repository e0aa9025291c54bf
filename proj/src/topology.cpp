#include "pircon/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pircon/error.hpp"

namespace pircon {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (Index v : f)
      if (v >= vertex_count) throw Error(ErrorCode::IndexOutOfRange, "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t a = 0; a < facets.size(); ++a) {
    bool contained = false;
    for (std::size_t b = 0; b < facets.size() && !contained; ++b)
      contained = a != b && facets[b].size() > facets[a].size() &&
                  std::includes(facets[b].begin(), facets[b].end(), facets[a].begin(), facets[a].end());
    if (!contained && !facets[a].empty()) facets_.push_back(facets[a]);
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces() const {
  const int dim = dimension();
  std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(dim + 1));
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1U) s.push_back(f[b]);
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& level : by_dim) out.emplace_back(level.begin(), level.end());
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<Simplex> facets;
  for (auto& chain : p.maximal_chains()) facets.push_back(std::move(chain));
  return SimplicialComplex(p.size(), std::move(facets));
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  const auto faces = k.faces();
  for (std::size_t d = 0; d < faces.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(faces[d].size());
  return chi;
}

long HomologySignature::alternating_sum() const {
  long s = 0;
  for (std::size_t k = 0; k < reduced_betti.size(); ++k) {
    const int d = static_cast<int>(k) - 1;
    s += (d % 2 == 0 ? 1 : -1) * reduced_betti[k];
  }
  return s;
}

namespace {

using Column = std::vector<std::uint32_t>;

// Rank over GF(2) of the matrix with the given sparse columns (row indices ascending).
std::size_t rank_z2(std::vector<Column> columns) {
  std::map<std::uint32_t, std::size_t> pivot_owner;
  std::size_t rank = 0;
  Column scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Column& col = columns[c];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) break;
      const Column& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back(), c);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

HomologySignature homology_z2(const SimplicialComplex& k) {
  HomologySignature h;
  h.dimension = k.dimension();
  const auto faces = k.faces();
  const int dim = h.dimension;

  // boundary_rank[d] = rank of the boundary map from d-faces to (d-1)-faces, d = 0..dim.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(dim + 2), 0);
  if (dim >= 0) boundary_rank[0] = faces[0].empty() ? 0 : 1;  // augmentation onto the empty face
  for (int d = 1; d <= dim; ++d) {
    const auto& rows = faces[static_cast<std::size_t>(d - 1)];
    std::map<Simplex, std::uint32_t> row_index;
    for (std::uint32_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    std::vector<Column> columns;
    columns.reserve(faces[static_cast<std::size_t>(d)].size());
    for (const auto& s : faces[static_cast<std::size_t>(d)]) {
      Column col;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        col.push_back(row_index.at(face));
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    boundary_rank[static_cast<std::size_t>(d)] = rank_z2(std::move(columns));
  }

  auto face_count = [&](int d) -> long {
    if (d == -1) return 1;
    return static_cast<long>(faces[static_cast<std::size_t>(d)].size());
  };
  auto rank_at = [&](int d) -> long {
    if (d < 0 || d > dim) return 0;
    return static_cast<long>(boundary_rank[static_cast<std::size_t>(d)]);
  };
  for (int d = -1; d <= dim; ++d) h.reduced_betti.push_back(face_count(d) - rank_at(d) - rank_at(d + 1));
  return h;
}

const char* to_string(Signature s) {
  switch (s) {
    case Signature::BallConsistent: return "ball-consistent";
    case Signature::SphereConsistent: return "sphere-consistent";
    case Signature::Neither: return "neither";
  }
  return "?";
}

Signature ball_sphere_signature(const HomologySignature& h, int expected_dim) {
  if (h.dimension != expected_dim) return Signature::Neither;
  bool all_zero = true, sphere = true;
  for (int d = -1; d <= h.dimension; ++d) {
    all_zero = all_zero && h.betti(d) == 0;
    sphere = sphere && h.betti(d) == (d == expected_dim ? 1 : 0);
  }
  if (all_zero) return Signature::BallConsistent;
  if (sphere) return Signature::SphereConsistent;
  return Signature::Neither;
}

int expected_dimension(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidConfig, "dimension formula needs n >= 2");
  const int closed = n % 2 == 0 ? n * n / 2 - 2 : (n * n - 1) / 2 - 2;
  const int rank_top = (n * n + n) / 2;
  const int rank_bottom = n % 2 == 0 ? n / 2 : (n + 1) / 2;
  const int from_ranks = rank_top - rank_bottom - 2;
  if (closed != from_ranks)
    throw Error(ErrorCode::FormulaMismatch, "dimension formulas disagree at n = " + std::to_string(n));
  return closed;
}

ShellingVerdict verify_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& facet_order) {
  if (!k.pure()) throw Error(ErrorCode::NotPure, "shelling check needs a pure complex");
  const auto& facets = k.facets();
  {
    auto sorted = facet_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != facets.size())
        throw Error(ErrorCode::SizeMismatch, "facet order is not a permutation of the facets");
  }
  for (std::size_t pos = 1; pos < facet_order.size(); ++pos) {
    const Simplex& f = facets[facet_order[pos]];
    // Vertices v such that f minus v lies in an earlier facet.
    std::vector<Index> ridge_vertices;
    for (Index v : f) {
      Simplex ridge;
      for (Index u : f)
        if (u != v) ridge.push_back(u);
      for (std::size_t prev = 0; prev < pos; ++prev) {
        const Simplex& g = facets[facet_order[prev]];
        if (std::includes(g.begin(), g.end(), ridge.begin(), ridge.end())) {
          ridge_vertices.push_back(v);
          break;
        }
      }
    }
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const Simplex& g = facets[facet_order[prev]];
      const bool covered = std::any_of(ridge_vertices.begin(), ridge_vertices.end(),
                                       [&](Index v) { return !std::binary_search(g.begin(), g.end(), v); });
      if (!covered) return {false, pos};
    }
  }
  return {};
}

nlohmann::json to_json(const SimplicialComplex& k) {
  return {{"vertex_count", k.vertex_count()}, {"dimension", k.dimension()}, {"facets", k.facets()}};
}

}  // namespace pircon
