#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hdx/lifting.hpp"
#include "hdx/lll.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Worst link expansion at one level. Level -1 stands for the empty face,
/// i.e. the complex's own 1-skeleton.
struct LevelSummary {
  int level = -1;
  int links = 0;
  double worst_two_sided = 0.0;
  double worst_one_sided = 0.0;
  Face argmax_face;        // first face attaining the worst two-sided value
  int disconnected = 0;    // links reporting lambda = 1 through disconnection
  int irregular = 0;       // links measured through the symmetric normalization
};

struct HdxCertificate {
  int dimension = 0;
  int vertex_count = 0;
  std::vector<std::int64_t> face_counts;
  RegularityProfile profile;
  std::vector<LevelSummary> levels;  // level -1 first, then 0..k-2
  double global_two_sided = 0.0;     // max over levels: X is a lambda-HDX iff <= lambda
  double global_one_sided = 0.0;
  int link_diameter_min = -1;        // over (k-2)-link skeletons; -1 when disconnected
};

/// Eigensolves the walk operator of every link at every level <= k-2
/// (including the empty face) and reports the worst cases per level.
HdxCertificate certify_hdx(const SimplicialComplex& X);

struct LawResult {
  std::string law;
  bool pass = false;
  std::int64_t checked = 0;
  std::string detail;  // first counterexample on failure
};

struct LiftLawReport {
  HdxCertificate base_cert, lift_cert;
  std::vector<LawResult> laws;
  bool pass = false;
};

inline const std::vector<std::string>& all_lift_laws() {
  static const std::vector<std::string> laws = {
      "regularity", "face-counts", "link-structure", "spectrum-union", "lower-links"};
  return laws;
}

/// Runs the structural laws a local lift must satisfy against its base:
/// degree doubling, the face-count law, per-link structure (lift at
/// codimension 2, tensor form below), the spectrum-union law with the
/// trivial-eigenvalue cross-check, and lower-link spectral invariance.
/// Failures are recorded, not thrown.
LiftLawReport verify_lift_laws(const SimplicialComplex& X, const FaceSigning& f,
                               const SimplicialComplex& X_hat,
                               const std::set<std::string>& laws = {});

struct FamilyReport {
  std::vector<LiftLawReport> stages;
  std::vector<int> vertex_counts;           // base first
  std::vector<std::int64_t> top_degrees;    // d_{k-1} per stage
  bool top_degree_invariant = false;
  bool pass = false;
};

/// Folds local lifts over the signings, verifying every law at each stage and
/// the family-level invariants (d_{k-1} fixed, vertices doubling).
FamilyReport certify_family(const SimplicialComplex& X0,
                            const std::vector<FaceSigning>& signings);

struct LinkAuditFailure {
  Face sigma_hat;
  std::string reason;
};

struct LiftLinkAudit {
  int links = 0;
  double worst_signed_norm = 0.0;
  std::vector<LinkAuditFailure> failures;
  bool pass = false;
};

/// Independent certification of a lifted complex's codimension-2 links: for
/// every sigma_hat in X_hat(k-2), extracts the new eigenvalues of the link
/// (its spectrum minus the base link's, per the union law) and checks their
/// norm against lambda_target, then checks (beta,t)-sparseness of the link's
/// skeleton directly. This re-derives the engine's output guarantee from the
/// lift alone.
LiftLinkAudit audit_lift_links(const SimplicialComplex& X, const SimplicialComplex& X_hat,
                               double lambda_target, double beta, int t);

struct DiameterStats {
  int links = 0;
  int min = -1, max = -1;
  double mean = 0.0;
  double lower_bound = 0.0;  // log2(d_{k-2}) / log2(d_{k-1}) for regular inputs
  int disconnected = 0;
};

/// BFS diameters of all (k-2)-link skeletons (the graph itself when k = 1).
DiameterStats link_diameter_stats(const SimplicialComplex& X);

}  // namespace hdx
