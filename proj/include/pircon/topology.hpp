#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pircon/poset.hpp"

namespace pircon {

using Simplex = std::vector<Index>;  // sorted vertex indices

/// Simplicial complex given by its facets. With no facets it is the complex
/// whose only face is the empty simplex (dimension -1).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Sorts vertices, drops facets contained in others, sorts the facet list.
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  int dimension() const;
  bool pure() const;

  /// Nonempty faces grouped by dimension: faces()[d] lists the d-faces, sorted.
  std::vector<std::vector<Simplex>> faces() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
};

/// Faces are the chains of P, facets its maximal chains.
SimplicialComplex order_complex(const Poset& p);

/// Unreduced: sum over nonempty faces of (-1)^dim.
long euler_characteristic(const SimplicialComplex& k);

struct HomologySignature {
  int dimension = -1;
  std::vector<long> reduced_betti;  // entry d+1 holds the degree-d number, d = -1..dimension

  long betti(int d) const {
    const auto k = static_cast<std::size_t>(d + 1);
    return k < reduced_betti.size() ? reduced_betti[k] : 0;
  }
  /// Sum of (-1)^d betti_d over d >= -1; equals euler_characteristic - 1.
  long alternating_sum() const;
};

/// Reduced homology over the two-element field, from boundary ranks computed
/// by sparse column reduction.
HomologySignature homology_z2(const SimplicialComplex& k);

enum class Signature { BallConsistent, SphereConsistent, Neither };

const char* to_string(Signature s);

/// Ball: all reduced Betti numbers vanish. Sphere: only betti(expected_dim) = 1.
/// Both also require dimension == expected_dim. Necessary conditions only.
Signature ball_sphere_signature(const HomologySignature& h, int expected_dim);

/// Dimension of the order complex of the proper part of F^B_n, from the
/// closed formula and from the rank difference; throws FormulaMismatch if
/// they disagree. Requires n >= 2.
int expected_dimension(int n);

struct ShellingVerdict {
  bool shelling = true;
  std::optional<std::size_t> witness;  // position in the order of the first bad facet
};

/// Each facet after the first must meet the union of its predecessors in a
/// nonempty union of codimension-one faces. Throws NotPure on a non-pure complex.
ShellingVerdict verify_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& facet_order);

nlohmann::json to_json(const SimplicialComplex& k);

}  // namespace pircon
