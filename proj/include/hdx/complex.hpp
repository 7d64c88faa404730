#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx {

/// A face is a strictly increasing list of vertex ids. The empty face is {}.
using Face = std::vector<int>;

/// Canonical string key of a face: dash-joined sorted ids, e.g. "0-3-7".
/// The empty face maps to "".
std::string face_key(const Face& f);
Face parse_face_key(const std::string& key);

/// Lexicographic order on canonical faces; the iteration order used everywhere.
bool face_less(const Face& a, const Face& b);

/// Degree profile (d_0, ..., d_{k-1}) of a hyper-regular complex, or a
/// witness of irregularity: a face together with the two degrees observed
/// at its level.
struct RegularityProfile {
  bool regular = false;
  std::vector<std::int64_t> degrees;
  Face offending_face;
  std::int64_t degree_seen = 0;
  std::int64_t degree_expected = 0;
};

class SimplicialComplex;

/// The link of a face, re-indexed to dense vertex ids, plus the map back to
/// the parent complex's ids.
struct LinkView {
  Face sigma;
  SimplicialComplex const* base = nullptr;
  std::vector<int> to_parent;  // link vertex id -> parent vertex id, ascending

  // set below the declaration of SimplicialComplex (needs a complete type)
  LinkView();
  LinkView(const LinkView&);
  LinkView(LinkView&&) noexcept;
  LinkView& operator=(const LinkView&);
  LinkView& operator=(LinkView&&) noexcept;
  ~LinkView();

  const SimplicialComplex& complex() const { return *complex_; }

  /// Link-local id of a parent vertex, or -1 when the vertex is not in the link.
  int local_of_parent(int parent_vertex) const;

  /// Translate a link-local face back to parent vertex ids.
  Face to_parent_face(const Face& local) const;

  std::unique_ptr<SimplicialComplex> complex_;
};

/// Immutable pure k-dimensional simplicial complex stored level by level.
/// Every level list is sorted lexicographically and duplicate-free; the class
/// maintains downward closure and purity from construction on.
class SimplicialComplex {
 public:
  /// Downward closure of the given top faces. Every face must have exactly
  /// k+1 distinct vertices. When `declared_vertices` is given, each declared
  /// vertex must appear in some top face (purity).
  static SimplicialComplex from_top_faces(int k, std::vector<Face> top_faces,
                                          std::optional<int> declared_vertices = std::nullopt);

  int dimension() const { return k_; }
  int vertex_count() const { return n_; }

  /// Faces of one level, 0 <= level <= k, in canonical order.
  const std::vector<Face>& faces(int level) const;
  std::int64_t face_count(int level) const { return static_cast<std::int64_t>(faces(level).size()); }

  bool contains(const Face& f) const;
  /// Position of a face in its level list; FaceNotFoundError when absent.
  int face_index(const Face& f) const;

  /// Number of (|sigma|)-faces containing sigma (one level up).
  /// degree({}) is the vertex count.
  std::int64_t degree(const Face& sigma) const;

  RegularityProfile regularity_profile() const;

  /// Link X_sigma, re-indexed. sigma must be a face of X (or {}). The link of
  /// a face with |sigma| = k is 0-dimensional; links of top faces themselves
  /// are not representable and raise DimensionError.
  LinkView link(const Face& sigma) const;

  /// Levels 0..j of this complex.
  SimplicialComplex skeleton(int j) const;

  /// The faces whose links drive the construction: X(k-2) for k >= 2, and
  /// the single empty face for k = 1 (the link of {} is X itself).
  std::vector<Face> codim2_faces() const;

  /// Optional original vertex labels (loaders fill these when re-mapping).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Full invariant check: strictly sorted faces, sorted duplicate-free
  /// levels, downward closure, purity. Throws on violation.
  void validate() const;

  /// Construct from pre-built levels. Validates everything unless
  /// `trusted` is set (used for links extracted from a validated parent).
  static SimplicialComplex from_levels(int k, int n, std::vector<std::vector<Face>> levels,
                                       bool trusted = false);

 private:
  SimplicialComplex() = default;

  int k_ = 0;
  int n_ = 0;
  std::vector<std::vector<Face>> levels_;  // levels_[l]: faces of size l+1
  std::vector<std::string> labels_;
};

/// The complete complex: all (l+1)-subsets of {0..n-1} at every level l <= k.
SimplicialComplex complete_complex(int n, int k);

}  // namespace hdx
