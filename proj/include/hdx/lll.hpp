#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdx/lifting.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Both sides of the degree inequality that admits the algorithmic-LLL
/// termination guarantee, evaluated in log2 space to dodge under/overflow.
struct NicenessReport {
  int k = 0;
  std::int64_t d_km2 = 0, d_km1 = 0;
  double lhs = 0.0, rhs = 0.0;          // d_{k-2}^{1-4 log2 d_{k-1}}  vs  2/(e(k+1)k d_{k-1}+1)
  double log2_lhs = 0.0, log2_rhs = 0.0;
  bool nice = false;
};

NicenessReport niceness_from_profile(int k, std::int64_t d_km2, std::int64_t d_km1);
NicenessReport is_nice(const SimplicialComplex& X);  // RegularityError when irregular

struct LLLConfig {
  double beta = 1.0;
  /// Spectral-norm threshold for each link's signed operator. Default:
  /// max{measured hdx_lambda(X), 4 * beta * (1 + log2(1/beta))}.
  std::optional<double> lambda_prime_target;
  /// Sparseness window on the lifted links. Default: floor(log2(2 d_{k-2})).
  std::optional<int> sparsity_t;
  /// Safety cap on total resamples. Default: 100 * |X(k-2)|.
  std::optional<std::int64_t> max_resamples;
  std::uint64_t rng_seed = 0;
  bool override_nice = false;
};

struct ResolvedLLLConfig {
  double beta = 1.0;
  double lambda_prime_target = 1.0;
  int sparsity_t = 1;
  std::int64_t max_resamples = 0;
  std::uint64_t rng_seed = 0;
  bool vacuous_beta = false;     // beta >= 1 makes the sparseness event empty
  bool vacuous_lambda = false;   // target >= 1 makes the spectral event empty
};

enum class BadEventCause { spectral_norm_exceeded, sparseness_violated };

struct BadEventRecord {
  Face sigma;
  BadEventCause cause{};
  double norm = 0.0;                          // for the spectral cause
  std::optional<SparsenessWitness> witness;   // for the sparseness cause
  int lift_sign = 1;                          // which of the two lifts over sigma
};

/// Evaluates the bad event at one (k-2)-face under the current signing:
/// (a) the norm of the signed link operator against the target, then (b)
/// (beta,t)-sparseness of both induced lift graphs (the two lifted copies of
/// sigma induce signings differing by a global flip, which preserves the
/// operator norm but not the lift graph).
std::optional<BadEventRecord> bad_event_holds(const SimplicialComplex& X, const FaceSigning& f,
                                              const Face& sigma, const ResolvedLLLConfig& cfg,
                                              std::int64_t* eigensolves = nullptr);

/// All (k-2)-faces sharing a top face with sigma (the dependency graph of
/// the bad events).
std::vector<Face> dependency_neighbors(const SimplicialComplex& X, const Face& sigma);

struct ResampleEvent {
  std::int64_t iteration = 0;
  Face sigma;
  std::vector<int> face_indices;  // the k-faces that were redrawn
  std::vector<int> old_values, new_values;
};

struct LiftStats {
  ResolvedLLLConfig config;
  std::int64_t iterations = 0;       // bad-event scans
  std::int64_t total_resamples = 0;
  std::int64_t eigensolves = 0;
  std::map<std::string, std::int64_t> resamples_per_face;  // face key -> count
  std::vector<ResampleEvent> log;
  double wall_seconds = 0.0;  // reported in text summaries, never in artifacts
};

/// Thrown when the resample cap is hit; carries the statistics so far.
struct NonTerminationError : HdxError {
  LiftStats stats;
  explicit NonTerminationError(std::string msg, LiftStats s)
      : HdxError(std::move(msg)), stats(std::move(s)) {}
};

struct MTResult {
  FaceSigning signing;
  LiftStats stats;
};

/// The randomized lifting algorithm: sample all k-face signs uniformly from
/// the seeded generator; while some bad event holds, resample every sign on a
/// face containing the canonically least violated sigma. Requires a nice
/// complex unless the override acknowledges the lost termination guarantee.
MTResult moser_tardos_lift(const SimplicialComplex& X, const LLLConfig& config,
                           const std::function<void(const ResampleEvent&)>& observer = {});

/// Fills defaults against a concrete complex (exposed for reporting).
ResolvedLLLConfig resolve_lll_config(const SimplicialComplex& X, const LLLConfig& config);

}  // namespace hdx
