#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "hdx/lifting.hpp"

namespace hdx {

struct DerandParams {
  double beta = 1.0;
  double c2 = 8.0;  // the constant inside the gamma penalty weight
  /// Even walk length >= 2. Default 2*ceil(log2 m) with m = d_{k-2}; desk-scale
  /// runs override it downwards (annotated in the resolved parameters).
  std::optional<int> r;
  std::optional<double> gamma;
  bool override_hypotheses = false;
};

/// Parameters pinned against a concrete complex. All greedy comparisons are
/// exact: beta and gamma enter as the exact rational values of their doubles.
struct ResolvedDerandParams {
  int k = 0;
  std::int64_t m = 0;  // d_{k-2}, the link vertex count (n when k = 1)
  std::int64_t d = 0;  // d_{k-1}, the link degree
  int r = 2;
  bool r_is_default = true;
  int pair_size = 1;  // |S ∪ T| for penalty pairs: floor(log2 m) + 1
  double beta = 1.0;
  double beta_prime = 1.0;  // beta (1 + log2(1/beta))
  double c2 = 8.0;
  mpq_class beta_sq;
  mpq_class gamma;
};

ResolvedDerandParams resolve_derand_params(const SimplicialComplex& X, const DerandParams& p);

/// E[Tr((A^f)^r)] of a regular link under a partial signing, as an exact
/// rational (signed closed-walk count over d^r). Walks whose unassigned edges
/// all appear an even number of times contribute the product of the assigned
/// signs; any odd unassigned edge kills the walk's expectation.
mpq_class expected_trace(const Graph& link, const EdgeSigning& partial, int r);

/// Expected penalty gamma * Pr[|<1_S, A^f 1_T>| > beta sqrt(|S||T|)] under a
/// partial signing: the unassigned edges of E(S,T) form an iid +-1 sum, so the
/// probability is an exact binomial tail.
mpq_class expected_penalty(const Graph& link, const EdgeSigning& partial,
                           const std::vector<int>& S, const std::vector<int>& T,
                           const mpq_class& beta_sq, const mpq_class& gamma);

/// Same with beta given as a double; it enters the comparison as the exact
/// rational value of its square.
mpq_class expected_penalty(const Graph& link, const EdgeSigning& partial,
                           const std::vector<int>& S, const std::vector<int>& T, double beta,
                           const mpq_class& gamma);

/// Conditional expectation of the greedy potential (sum over codimension-2
/// links of trace term plus penalty terms) maintained incrementally: an
/// assignment touches only the links of the faces below the assigned k-face.
class PotentialState {
 public:
  PotentialState(const SimplicialComplex& X, const ResolvedDerandParams& params,
                 std::optional<FaceSigning> initial = std::nullopt);

  const mpq_class& total() const { return total_; }
  const FaceSigning& signing() const { return signing_; }

  /// Total after hypothetically assigning face_idx := value; no commit.
  mpq_class candidate_total(int face_idx, int value) const;
  /// Commits an assignment; StateError when the face is already assigned.
  void assign(int face_idx, int value);

  int sigma_count() const { return static_cast<int>(links_.size()); }
  const Face& sigma(int s) const { return sigmas_[s]; }
  const mpq_class& trace_term(int s) const { return trace_[s]; }
  const mpq_class& penalty_term(int s) const { return penalty_[s]; }

 private:
  struct Terms {
    mpq_class trace, penalty;
  };
  Terms compute_terms(int s) const;
  EdgeSigning link_signing(int s) const;

  ResolvedDerandParams params_;
  std::vector<Face> sigmas_;
  std::vector<InducedLink> links_;
  std::vector<std::vector<int>> affected_;  // k-face index -> sigma indices
  mutable FaceSigning signing_;  // candidate evaluation toggles one entry
  std::vector<mpq_class> trace_, penalty_;
  mpq_class total_;
};

/// From-scratch evaluation (the oracle the incremental path is tested against).
mpq_class expected_potential(const SimplicialComplex& X, const FaceSigning& partial,
                             const ResolvedDerandParams& params);

struct DerandResult {
  FaceSigning signing;
  ResolvedDerandParams params;
  /// potential_trace[0] is E[Q] of the empty assignment; entry i+1 follows
  /// the i-th greedy choice. Non-increasing by the averaging argument.
  std::vector<mpq_class> potential_trace;
  std::vector<Face> sigmas;
  std::vector<mpq_class> final_trace_terms;
  std::vector<mpq_class> final_penalty_terms;
};

/// Conditional-probabilities greedy: fixes each k-face sign to whichever value
/// does not increase the conditional expectation of the potential (ties to
/// +1). Requires E[Q] of the empty assignment below gamma (AdmissibilityError
/// otherwise) and the degree hypotheses unless overridden.
DerandResult greedy_derand_lift(const SimplicialComplex& X, const DerandParams& params);

}  // namespace hdx
