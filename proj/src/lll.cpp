#include "hdx/lll.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>

namespace hdx {

NicenessReport niceness_from_profile(int k, std::int64_t d_km2, std::int64_t d_km1) {
  if (k < 1) throw ParameterError("niceness needs k >= 1");
  if (d_km2 < 1 || d_km1 < 1) throw ParameterError("niceness needs positive degrees");
  NicenessReport r;
  r.k = k;
  r.d_km2 = d_km2;
  r.d_km1 = d_km1;
  const double log2_dkm1 = std::log2(static_cast<double>(d_km1));
  const double log2_dkm2 = std::log2(static_cast<double>(d_km2));
  r.log2_lhs = (1.0 - 4.0 * log2_dkm1) * log2_dkm2;
  r.rhs = 2.0 / (std::exp(1.0) * (k + 1) * k * static_cast<double>(d_km1) + 1.0);
  r.log2_rhs = std::log2(r.rhs);
  r.lhs = std::exp2(r.log2_lhs);  // may underflow to 0; the verdict is log-space
  r.nice = r.log2_lhs < r.log2_rhs;
  return r;
}

NicenessReport is_nice(const SimplicialComplex& X) {
  RegularityProfile p = X.regularity_profile();
  if (!p.regular)
    throw RegularityError("niceness is defined for regular complexes; face " +
                          face_key(p.offending_face) + " has degree " +
                          std::to_string(p.degree_seen) + " vs " +
                          std::to_string(p.degree_expected));
  const int k = X.dimension();
  const std::int64_t d_km2 = (k >= 2) ? p.degrees[k - 2] : X.vertex_count();
  return niceness_from_profile(k, d_km2, p.degrees[k - 1]);
}

std::optional<BadEventRecord> bad_event_holds(const SimplicialComplex& X, const FaceSigning& f,
                                              const Face& sigma, const ResolvedLLLConfig& cfg,
                                              std::int64_t* eigensolves) {
  InducedLink il = induced_link_signing(X, f, sigma, 1);
  if (!il.signing.complete())
    throw PartialSigningError("bad event needs the signing on all faces containing " +
                              face_key(sigma));

  // (a) spectral norm of the signed link operator; sign flips preserve it
  SpectrumReport rep = spectrum(SignedWalkOperator::make(il.skel, il.signing));
  if (eigensolves) ++*eigensolves;
  if (rep.norm() > cfg.lambda_prime_target + kSpectralTol) {
    BadEventRecord rec;
    rec.sigma = sigma;
    rec.cause = BadEventCause::spectral_norm_exceeded;
    rec.norm = rep.norm();
    return rec;
  }

  // (b) sparseness of both lifts over sigma; the two differ as graphs
  for (int sign : {1, -1}) {
    Graph lifted = graph_induced_lift(il.skel, sign == 1 ? il.signing : il.signing.negated());
    auto witness = is_sparse(lifted, cfg.beta, cfg.sparsity_t);
    if (witness) {
      BadEventRecord rec;
      rec.sigma = sigma;
      rec.cause = BadEventCause::sparseness_violated;
      rec.witness = std::move(witness);
      rec.lift_sign = sign;
      return rec;
    }
  }
  return std::nullopt;
}

std::vector<Face> dependency_neighbors(const SimplicialComplex& X, const Face& sigma) {
  const int k = X.dimension();
  if (k < 2) return {};
  if (static_cast<int>(sigma.size()) != k - 1 || !X.contains(sigma))
    throw FaceNotFoundError("expected a (k-2)-face of X, got " + face_key(sigma));
  std::set<Face> out;
  Face sub;
  for (const Face& tau : X.faces(k)) {
    if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
    for (size_t i = 0; i < tau.size(); ++i)
      for (size_t j = i + 1; j < tau.size(); ++j) {
        sub.clear();
        for (size_t t = 0; t < tau.size(); ++t)
          if (t != i && t != j) sub.push_back(tau[t]);
        if (sub != sigma) out.insert(sub);
      }
  }
  return {out.begin(), out.end()};
}

ResolvedLLLConfig resolve_lll_config(const SimplicialComplex& X, const LLLConfig& config) {
  RegularityProfile p = X.regularity_profile();
  if (!p.regular) throw RegularityError("the lifting algorithm needs a regular complex");
  const int k = X.dimension();
  const std::int64_t d_km2 = (k >= 2) ? p.degrees[k - 2] : X.vertex_count();
  const std::int64_t n_events =
      (k >= 2) ? static_cast<std::int64_t>(X.faces(k - 2).size()) : 1;

  if (!(config.beta > 0.0)) throw ParameterError("beta must be positive");
  ResolvedLLLConfig r;
  r.beta = config.beta;
  if (config.lambda_prime_target) {
    r.lambda_prime_target = *config.lambda_prime_target;
  } else {
    const double from_beta =
        4.0 * config.beta * (1.0 + std::log2(1.0 / config.beta));
    r.lambda_prime_target = std::max(hdx_lambda(X), from_beta);
  }
  r.sparsity_t = config.sparsity_t
                     ? *config.sparsity_t
                     : static_cast<int>(std::floor(std::log2(2.0 * static_cast<double>(d_km2))));
  if (r.sparsity_t < 1) r.sparsity_t = 1;
  r.max_resamples = config.max_resamples ? *config.max_resamples : 100 * n_events;
  r.rng_seed = config.rng_seed;
  r.vacuous_beta = r.beta >= 1.0;
  r.vacuous_lambda = r.lambda_prime_target >= 1.0;
  return r;
}

MTResult moser_tardos_lift(const SimplicialComplex& X, const LLLConfig& config,
                           const std::function<void(const ResampleEvent&)>& observer) {
  const int k = X.dimension();
  ResolvedLLLConfig cfg = resolve_lll_config(X, config);
  if (!config.override_nice) {
    NicenessReport nr = is_nice(X);
    if (!nr.nice)
      throw NicenessError("complex is not nice (log2 lhs " + std::to_string(nr.log2_lhs) +
                          " >= log2 rhs " + std::to_string(nr.log2_rhs) +
                          "); pass the override to run without the termination guarantee");
  }

  const std::vector<Face> events = X.codim2_faces();
  const auto& top = X.faces(k);

  // k-faces containing each event face, by index into X(k)
  std::vector<std::vector<int>> incident(events.size());
  for (size_t s = 0; s < events.size(); ++s) {
    const Face& sigma = events[s];
    for (size_t t = 0; t < top.size(); ++t)
      if (std::includes(top[t].begin(), top[t].end(), sigma.begin(), sigma.end()))
        incident[s].push_back(static_cast<int>(t));
  }

  std::mt19937_64 rng(cfg.rng_seed);
  auto draw = [&rng]() { return (rng() & 1ull) ? 1 : -1; };
  const auto t0 = std::chrono::steady_clock::now();

  MTResult result;
  result.signing = FaceSigning(static_cast<int>(top.size()));
  for (int i = 0; i < result.signing.size(); ++i) result.signing.set(i, draw());
  result.stats.config = cfg;

  while (true) {
    ++result.stats.iterations;
    std::optional<size_t> violated;
    for (size_t s = 0; s < events.size(); ++s) {
      // scan in canonical order: the first violated face is the least one
      if (bad_event_holds(X, result.signing, events[s], cfg, &result.stats.eigensolves)) {
        violated = s;
        break;
      }
    }
    if (!violated) break;

    if (++result.stats.total_resamples > cfg.max_resamples)
      throw NonTerminationError("resample cap " + std::to_string(cfg.max_resamples) +
                                    " exceeded",
                                std::move(result.stats));

    const Face& sigma = events[*violated];
    ResampleEvent ev;
    ev.iteration = result.stats.iterations;
    ev.sigma = sigma;
    for (int fi : incident[*violated]) {
      ev.face_indices.push_back(fi);
      ev.old_values.push_back(result.signing.value(fi));
      const int nv = draw();
      result.signing.set(fi, nv);
      ev.new_values.push_back(nv);
    }
    ++result.stats.resamples_per_face[face_key(sigma)];
    if (observer) observer(ev);
    result.stats.log.push_back(std::move(ev));
  }
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace hdx
