#pragma once

#include <cstdint>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Assignment of +1/-1 to the top faces of a complex, possibly partial.
/// Stored by position in the canonical X(k) order; 0 marks unassigned.
class FaceSigning {
 public:
  FaceSigning() = default;
  explicit FaceSigning(int face_count) : values_(face_count, 0) {}
  static FaceSigning constant(int face_count, int value);

  int size() const { return static_cast<int>(values_.size()); }
  int value(int idx) const { return values_.at(idx); }
  void set(int idx, int v);
  void clear(int idx) { values_.at(idx) = 0; }
  bool complete() const;
  int unassigned_count() const;

  bool operator==(const FaceSigning&) const = default;

 private:
  std::vector<signed char> values_;
};

// Lifted vertices: v^{+1} -> 2v, v^{-1} -> 2v+1. The encoding fixes a global
// canonical order, so repeated runs produce identical complexes.
inline int lifted_vertex(int base, int sign) { return 2 * base + (1 - sign) / 2; }
inline int base_vertex(int lifted) { return lifted / 2; }
inline int vertex_sign(int lifted) { return (lifted % 2 == 0) ? 1 : -1; }

/// Product of the sign coordinates of a lifted face. sign({}) = +1.
int face_sign(const Face& lifted_face);

/// Strips signs: pi(v^j) = v, extended to faces.
Face project_face(const Face& lifted_face);

/// The f-induced 2-lift of a graph: vertices V x {+-1}; {v^j, u^i} is an edge
/// iff {v,u} is an edge and i*j = f({u,v}).
Graph graph_induced_lift(const Graph& g, const EdgeSigning& f);

/// The f-local lift: all signed copies at levels < k, and at level k exactly
/// the signed copies whose sign product equals f of the base face. Output is
/// re-validated against every complex invariant.
SimplicialComplex local_lift(const SimplicialComplex& X, const FaceSigning& f);

/// A (k-2)-link of X together with the edge signing induced by a lifted copy
/// of the face: g(e) = sign * f(sigma ⊔ e). Edges whose k-face is unassigned
/// stay unassigned.
struct InducedLink {
  LinkView view;
  Graph skel;
  EdgeSigning signing;
  std::vector<int> edge_face;  // link edge index -> k-face index in X
};

/// For sigma in X(k-2) (the empty face when k = 1) and a sign in {+1,-1}.
InducedLink induced_link_signing(const SimplicialComplex& X, const FaceSigning& f,
                                 const Face& sigma, int sign);

/// For a lifted (k-2)-face: projects, takes face_sign, delegates.
InducedLink induced_edge_signing(const SimplicialComplex& X, const FaceSigning& f,
                                 const Face& sigma_hat);

/// Verifies the structure of the sigma_hat-link of X_hat against the base:
/// codimension-2 links must equal the induced lift of the base link under the
/// vertex identification u^i -> u^i; lower-dimensional links must equal the
/// base link tensored with the two-vertex complete graph with self loops.
/// Returns true, or throws StructureViolation carrying the first mismatch.
bool check_link_structure(const SimplicialComplex& X, const FaceSigning& f,
                          const SimplicialComplex& X_hat, const Face& sigma_hat);

/// Verifies spec(lift of G under f) = spec(A) ⊎ spec(A^f) as sorted multisets
/// within tolerance. Throws SpectralViolation on mismatch.
bool spectrum_union_check(const Graph& g, const EdgeSigning& f);

/// Uniform random signing from a seeded generator (deterministic per seed).
FaceSigning random_signing(int face_count, std::uint64_t seed);
EdgeSigning random_edge_signing(int edge_count, std::uint64_t seed);

}  // namespace hdx
