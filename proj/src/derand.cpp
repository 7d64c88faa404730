#include "hdx/derand.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace hdx {

namespace {

mpz_class mpz_pow(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

mpq_class mpq_pow(const mpq_class& base, unsigned long exp) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
  out.canonicalize();
  return out;
}

// Rooted closed walks of length r with edge-multiplicity bookkeeping. The
// accumulator fits a long long: enumerating more than ~1e18 walks is out of
// computational reach long before the counter could wrap.
struct WalkEnumerator {
  const Graph& g;
  const EdgeSigning& f;
  int r;
  int start = 0;
  std::vector<int> path_edges;
  std::vector<int> mult;
  std::vector<long long> stamp;
  std::vector<int> dist;  // BFS distance to the current start, for pruning
  long long leaf = 0;
  long long acc = 0;

  WalkEnumerator(const Graph& g, const EdgeSigning& f, int r)
      : g(g), f(f), r(r), path_edges(r), mult(g.edge_count(), 0),
        stamp(g.edge_count(), -1), dist(g.n) {}

  void bfs_from_start() {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    q.push(start);
    dist[start] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
  }

  void run() {
    for (start = 0; start < g.n; ++start) {
      bfs_from_start();
      dfs(start, 0);
    }
  }

  void dfs(int v, int depth) {
    if (depth == r) {
      if (v == start) evaluate();
      return;
    }
    const auto& nb = g.adj[v];
    const auto& ie = g.incident_edge[v];
    for (size_t i = 0; i < nb.size(); ++i) {
      if (dist[nb[i]] < 0 || dist[nb[i]] > r - depth - 1) continue;  // cannot return
      path_edges[depth] = ie[i];
      ++mult[ie[i]];
      dfs(nb[i], depth + 1);
      --mult[ie[i]];
    }
  }

  void evaluate() {
    ++leaf;
    int prod = 1;
    for (int i = 0; i < r; ++i) {
      const int e = path_edges[i];
      if (stamp[e] == leaf) continue;
      stamp[e] = leaf;
      const int val = f.value(e);
      if (val == 0) {
        if (mult[e] & 1) return;  // odd unassigned edge: expectation zero
      } else if ((mult[e] & 1) && val < 0) {
        prod = -prod;
      }
    }
    acc += prod;
  }
};

}  // namespace

mpq_class expected_trace(const Graph& link, const EdgeSigning& partial, int r) {
  if (r < 2 || (r % 2) != 0) throw ParameterError("walk length r must be even and >= 2");
  auto d = link.regular_degree();
  if (!d || *d < 1) throw OperatorError("expected trace needs a regular link");
  if (partial.size() != link.edge_count())
    throw DomainError("signing does not match the link's edge list");

  WalkEnumerator we(link, partial, r);
  we.run();
  mpq_class out(static_cast<long>(we.acc));
  out /= mpq_class(mpz_pow(mpz_class(*d), static_cast<unsigned long>(r)));
  return out;
}

mpq_class expected_penalty(const Graph& link, const EdgeSigning& partial,
                           const std::vector<int>& S, const std::vector<int>& T,
                           const mpq_class& beta_sq, const mpq_class& gamma) {
  for (int s : S)
    for (int t : T)
      if (s == t) throw SetError("S and T must be disjoint");
  auto dopt = link.regular_degree();
  if (!dopt || *dopt < 1) throw OperatorError("expected penalty needs a regular link");
  const long long d = *dopt;

  long long assigned_sum = 0;
  unsigned long unassigned = 0;
  for (int s : S)
    for (int t : T) {
      const int e = link.edge_index(s, t);
      if (e < 0) continue;
      const int v = partial.value(e);
      if (v == 0)
        ++unassigned;
      else
        assigned_sum += v;
    }

  // exceed(w) <=> (assigned_sum + w)^2 > beta^2 |S||T| d^2, all exact
  const mpq_class rhs =
      beta_sq * mpq_class(static_cast<long>(S.size() * T.size())) *
      mpq_class(static_cast<long>(d * d));
  auto exceeds = [&](long long w) {
    const mpz_class v(static_cast<long>(assigned_sum + w));
    return mpq_class(v * v) > rhs;
  };

  mpz_class tail = 0;
  mpz_class binom;
  for (unsigned long j = 0; j <= unassigned; ++j) {
    const long long w = 2 * static_cast<long long>(j) - static_cast<long long>(unassigned);
    if (!exceeds(w)) continue;
    mpz_bin_uiui(binom.get_mpz_t(), unassigned, j);
    tail += binom;
  }
  if (tail == 0) return mpq_class(0);
  mpq_class prob(tail);
  prob /= mpq_class(mpz_pow(mpz_class(2), unassigned));
  return gamma * prob;
}

mpq_class expected_penalty(const Graph& link, const EdgeSigning& partial,
                           const std::vector<int>& S, const std::vector<int>& T, double beta,
                           const mpq_class& gamma) {
  return expected_penalty(link, partial, S, T, mpq_class(beta) * mpq_class(beta), gamma);
}

ResolvedDerandParams resolve_derand_params(const SimplicialComplex& X, const DerandParams& p) {
  RegularityProfile prof = X.regularity_profile();
  if (!prof.regular) throw RegularityError("derandomized lifting needs a regular complex");
  const int k = X.dimension();

  ResolvedDerandParams r;
  r.k = k;
  r.m = (k >= 2) ? prof.degrees[k - 2] : X.vertex_count();
  r.d = prof.degrees[k - 1];
  if (r.m < 2) throw ParameterError("links must have at least two vertices");
  if (!(p.beta > 0.0)) throw ParameterError("beta must be positive");

  const int default_r =
      2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(r.m))));
  r.r = p.r ? *p.r : std::max(2, default_r);
  r.r_is_default = !p.r.has_value();
  if (r.r < 2 || (r.r % 2) != 0) throw ParameterError("walk length r must be even and >= 2");

  r.pair_size = static_cast<int>(std::floor(std::log2(static_cast<double>(r.m)))) + 1;
  if (r.pair_size > 30) throw ParameterError("penalty window exceeds enumerable size");
  r.beta = p.beta;
  r.beta_prime = p.beta * (1.0 + std::log2(1.0 / p.beta));
  r.c2 = p.c2;
  r.beta_sq = mpq_class(p.beta) * mpq_class(p.beta);

  if (p.gamma) {
    r.gamma = mpq_class(*p.gamma);
  } else {
    const mpq_class base = mpq_class(p.c2) * mpq_class(r.beta_prime) *
                           mpq_class(mpz_pow(mpz_class(static_cast<long>(r.d)),
                                             3ul * k * k));
    r.gamma = mpq_pow(base, static_cast<unsigned long>(r.r));
  }
  if (!(r.gamma > 0))
    throw ParameterError("gamma must be positive; supply it explicitly when beta > 2");
  return r;
}

PotentialState::PotentialState(const SimplicialComplex& X, const ResolvedDerandParams& params,
                               std::optional<FaceSigning> initial)
    : params_(params) {
  const int top_count = static_cast<int>(X.faces(X.dimension()).size());
  signing_ = initial ? std::move(*initial) : FaceSigning(top_count);
  if (signing_.size() != top_count) throw DomainError("signing does not match X(k)");

  sigmas_ = X.codim2_faces();
  links_.reserve(sigmas_.size());
  affected_.assign(top_count, {});
  trace_.resize(sigmas_.size());
  penalty_.resize(sigmas_.size());

  for (size_t s = 0; s < sigmas_.size(); ++s) {
    links_.push_back(induced_link_signing(X, signing_, sigmas_[s], 1));
    for (int fi : links_.back().edge_face) {
      auto& lst = affected_[fi];
      if (lst.empty() || lst.back() != static_cast<int>(s)) lst.push_back(static_cast<int>(s));
    }
  }
  total_ = 0;
  for (size_t s = 0; s < sigmas_.size(); ++s) {
    Terms t = compute_terms(static_cast<int>(s));
    trace_[s] = t.trace;
    penalty_[s] = t.penalty;
    total_ += t.trace + t.penalty;
  }
}

EdgeSigning PotentialState::link_signing(int s) const {
  const InducedLink& il = links_[s];
  EdgeSigning es(il.skel.edge_count());
  for (int e = 0; e < il.skel.edge_count(); ++e) {
    const int v = signing_.value(il.edge_face[e]);
    if (v != 0) es.set(e, v);
  }
  return es;
}

PotentialState::Terms PotentialState::compute_terms(int s) const {
  const InducedLink& il = links_[s];
  const EdgeSigning es = link_signing(s);
  Terms t;
  t.trace = expected_trace(il.skel, es, params_.r);
  t.penalty = 0;
  // penalty pairs: connected sets of the exact window size, every split
  enumerate_connected_subsets(
      il.skel, params_.pair_size, params_.pair_size, [&](const std::vector<int>& U) {
        const int c = static_cast<int>(U.size());
        std::vector<int> S, T;
        for (std::uint32_t m = 0; m + 1 < (1u << (c - 1)); ++m) {
          S.assign(1, U[0]);
          T.clear();
          for (int i = 1; i < c; ++i) ((m >> (i - 1)) & 1 ? S : T).push_back(U[i]);
          t.penalty += expected_penalty(il.skel, es, S, T, params_.beta_sq, params_.gamma);
        }
        return true;
      });
  return t;
}

mpq_class PotentialState::candidate_total(int face_idx, int value) const {
  if (signing_.value(face_idx) != 0)
    throw StateError("face already assigned");
  signing_.set(face_idx, value);
  mpq_class out = total_;
  for (int s : affected_[face_idx]) {
    Terms t = compute_terms(s);
    out += (t.trace - trace_[s]) + (t.penalty - penalty_[s]);
  }
  signing_.clear(face_idx);
  return out;
}

void PotentialState::assign(int face_idx, int value) {
  if (signing_.value(face_idx) != 0)
    throw StateError("face already assigned");
  signing_.set(face_idx, value);
  for (int s : affected_[face_idx]) {
    Terms t = compute_terms(s);
    total_ += (t.trace - trace_[s]) + (t.penalty - penalty_[s]);
    trace_[s] = t.trace;
    penalty_[s] = t.penalty;
  }
}

mpq_class expected_potential(const SimplicialComplex& X, const FaceSigning& partial,
                             const ResolvedDerandParams& params) {
  return PotentialState(X, params, partial).total();
}

DerandResult greedy_derand_lift(const SimplicialComplex& X, const DerandParams& params) {
  ResolvedDerandParams rp = resolve_derand_params(X, params);
  if (!params.override_hypotheses) {
    const double log2_d = std::log2(static_cast<double>(rp.d));
    if (!(log2_d > 10.0 * rp.k))
      throw HypothesisError("hypothesis d_{k-1} > 2^{10k} fails; pass the override");
    const double log2_count =
        std::log2(static_cast<double>(X.codim2_faces().size()));
    if (!(log2_count <= 10.0 * rp.k * std::log2(static_cast<double>(rp.m))))
      throw HypothesisError("hypothesis |X(k-2)| <= d_{k-2}^{10k} fails; pass the override");
  }

  PotentialState state(X, rp);
  DerandResult out;
  out.params = rp;
  out.potential_trace.push_back(state.total());
  if (!(state.total() < rp.gamma))
    throw AdmissibilityError("E[Q] of the empty assignment (" +
                             std::to_string(state.total().get_d()) + ") is not below gamma (" +
                             std::to_string(rp.gamma.get_d()) + ")");

  const int faces = static_cast<int>(X.faces(X.dimension()).size());
  for (int fi = 0; fi < faces; ++fi) {
    const mpq_class plus = state.candidate_total(fi, 1);
    const mpq_class minus = state.candidate_total(fi, -1);
    state.assign(fi, plus <= minus ? 1 : -1);
    out.potential_trace.push_back(state.total());
  }

  out.signing = state.signing();
  for (int s = 0; s < state.sigma_count(); ++s) {
    out.sigmas.push_back(state.sigma(s));
    out.final_trace_terms.push_back(state.trace_term(s));
    out.final_penalty_terms.push_back(state.penalty_term(s));
  }
  return out;
}

}  // namespace hdx
