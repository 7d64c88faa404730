#include "hdx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace hdx {

namespace {

// Fixed-width masks keep the subset recursion allocation-free; W is the
// number of 64-bit words covering the vertex set.
template <int W>
struct Mask {
  std::uint64_t w[W] = {};
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int lowest() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
    return -1;
  }
};

template <int W>
struct SubsetEnumerator {
  std::vector<Mask<W>> rows;
  int n;
  int min_size, max_size;
  const std::function<bool(const std::vector<int>&)>& visit;

  std::vector<int> U;
  Mask<W> in_U;
  Mask<W> above;  // vertices > current anchor
  bool stopped = false;

  SubsetEnumerator(const Graph& g, int min_size, int max_size,
                   const std::function<bool(const std::vector<int>&)>& visit)
      : n(g.n), min_size(min_size), max_size(max_size), visit(visit) {
    rows.assign(n, Mask<W>{});
    for (const auto& [u, v] : g.edges) {
      rows[u].set(v);
      rows[v].set(u);
    }
  }

  void run() {
    U.reserve(max_size);
    for (int a = 0; a < n && !stopped; ++a) {
      above = Mask<W>{};
      for (int v = a + 1; v < n; ++v) above.set(v);
      U.assign(1, a);
      in_U = Mask<W>{};
      in_U.set(a);
      if (min_size <= 1 && !visit(U)) {
        stopped = true;
        return;
      }
      Mask<W> ext;
      for (int i = 0; i < W; ++i) ext.w[i] = rows[a].w[i] & above.w[i];
      grow(ext, Mask<W>{});
    }
  }

  // Each connected superset of U (within `above` plus the anchor) is reached
  // exactly once: after branching on v, v is banned for later branches.
  void grow(const Mask<W>& ext, Mask<W> banned) {
    if (stopped || static_cast<int>(U.size()) >= max_size) return;
    Mask<W> avail;
    for (int i = 0; i < W; ++i) avail.w[i] = ext.w[i] & ~banned.w[i];
    for (int v = avail.lowest(); v >= 0; v = avail.lowest()) {
      avail.reset(v);
      U.push_back(v);
      in_U.set(v);
      if (static_cast<int>(U.size()) >= min_size && !visit(U)) {
        stopped = true;
        return;
      }
      Mask<W> next;
      for (int i = 0; i < W; ++i)
        next.w[i] = (ext.w[i] | (rows[v].w[i] & above.w[i])) & ~in_U.w[i] & ~banned.w[i];
      next.reset(v);
      grow(next, banned);
      U.pop_back();
      in_U.reset(v);
      if (stopped) return;
      banned.set(v);
    }
  }
};

template <int W>
void enumerate_width(const Graph& g, int min_size, int max_size,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  SubsetEnumerator<W> e(g, min_size, max_size, visit);
  e.run();
}

}  // namespace

void enumerate_connected_subsets(const Graph& g, int min_size, int max_size,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (max_size < 1 || g.n == 0) return;
  if (g.n <= 64) return enumerate_width<1>(g, min_size, max_size, visit);
  if (g.n <= 128) return enumerate_width<2>(g, min_size, max_size, visit);
  if (g.n <= 256) return enumerate_width<4>(g, min_size, max_size, visit);
  throw ParameterError("connected-subset enumeration supports up to 256 vertices");
}

double SpectrumReport::norm() const {
  double m = 0.0;
  for (double x : eigenvalues) m = std::max(m, std::abs(x));
  return m;
}

SpectrumReport spectrum(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw OperatorError("operator matrix not square");
  const double asym = (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw OperatorError("operator matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw OperatorError("eigensolve failed");
  SpectrumReport rep;
  const auto& ev = es.eigenvalues();  // ascending
  rep.eigenvalues.resize(ev.size());
  for (int i = 0; i < ev.size(); ++i) rep.eigenvalues[i] = ev(ev.size() - 1 - i);
  if (rep.eigenvalues.size() >= 2) {
    rep.one_sided = rep.eigenvalues[1];
    rep.two_sided = std::max(rep.eigenvalues[1], std::abs(rep.eigenvalues.back()));
  }
  return rep;
}

WalkOperator WalkOperator::from_graph(const Graph& g) {
  auto d = g.regular_degree();
  if (!d || *d < 1) throw OperatorError("walk operator requires a regular graph of degree >= 1");
  WalkOperator op;
  op.size = g.n;
  op.degree = *d;
  op.entries = Eigen::MatrixXd::Zero(g.n, g.n);
  const double w = 1.0 / *d;
  for (const auto& [u, v] : g.edges) {
    op.entries(u, v) = w;
    op.entries(v, u) = w;
  }
  return op;
}

SignedWalkOperator SignedWalkOperator::make(Graph g, EdgeSigning f) {
  if (f.size() != g.edge_count())
    throw DomainError("signing size does not match the graph's edge count");
  auto d = g.regular_degree();
  if (!d || *d < 1) throw OperatorError("signed walk operator requires a regular graph");
  SignedWalkOperator op;
  op.degree = *d;
  op.graph = std::move(g);
  op.signing = std::move(f);
  return op;
}

Eigen::MatrixXd SignedWalkOperator::entries() const {
  if (!signing.complete())
    throw PartialSigningError("signed walk matrix needs a complete signing");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(graph.n, graph.n);
  const double w = 1.0 / degree;
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto [u, v] = graph.edges[e];
    m(u, v) = w * signing.value(e);
    m(v, u) = w * signing.value(e);
  }
  return m;
}

SpectrumReport spectrum(const WalkOperator& op) { return spectrum(op.entries); }
SpectrumReport spectrum(const SignedWalkOperator& op) { return spectrum(op.entries()); }

double bilinear_form(const SignedWalkOperator& op, const std::vector<int>& S,
                     const std::vector<int>& T) {
  long long sum = 0;
  for (int v : S)
    for (int u : T) {
      int e = op.graph.edge_index(v, u);
      if (e < 0) continue;
      int val = op.signing.value(e);
      if (val == 0)
        throw PartialSigningError("bilinear form crosses an unassigned edge");
      sum += val;
    }
  return static_cast<double>(sum) / op.degree;
}

double bilinear_form(const WalkOperator& op, const std::vector<int>& S,
                     const std::vector<int>& T) {
  double sum = 0;
  for (int v : S)
    for (int u : T) sum += op.entries(v, u);
  return sum;
}

std::optional<SparsenessWitness> is_sparse(const Graph& g, double beta, int t) {
  if (t < 1) throw ParameterError("sparseness window t must be >= 1");
  if (t > 30) throw ParameterError("sparseness window t > 30 is not enumerable");
  auto dopt = g.regular_degree();
  if (!dopt || *dopt < 1) throw OperatorError("sparseness check requires a regular graph");
  const double d = *dopt;
  const int cap = std::min(t, g.n);

  // bound table and feasibility pruning: e(S,T) <= |S||T|, so a split size
  // whose maximal form |S||T|/d stays within the bound can never violate
  std::vector<std::vector<double>> bound(cap + 1, std::vector<double>(cap + 1, 0.0));
  std::vector<std::vector<bool>> feasible(cap + 1, std::vector<bool>(cap + 1, false));
  std::vector<bool> size_feasible(cap + 1, false);
  int max_feasible = 0;
  for (int a = 1; a < cap + 1; ++a)
    for (int b = 1; a + b <= cap; ++b) {
      bound[a][b] = beta * std::sqrt(static_cast<double>(a) * b);
      if (static_cast<double>(a) * b / d > bound[a][b]) {
        feasible[a][b] = true;
        size_feasible[a + b] = true;
        max_feasible = std::max(max_feasible, a + b);
      }
    }
  if (max_feasible < 2) return std::nullopt;

  std::vector<std::vector<std::uint64_t>> rows(g.n,
                                               std::vector<std::uint64_t>((g.n + 63) / 64, 0));
  for (const auto& [u, v] : g.edges) {
    rows[u][v >> 6] |= 1ull << (v & 63);
    rows[v][u >> 6] |= 1ull << (u & 63);
  }
  auto adjacent = [&](int u, int v) { return (rows[u][v >> 6] >> (v & 63)) & 1; };

  std::optional<SparsenessWitness> witness;
  std::function<bool(const std::vector<int>&)> visit = [&](const std::vector<int>& U) {
    const int c = static_cast<int>(U.size());
    if (!size_feasible[c]) return true;
    std::uint32_t ladj[32] = {0};
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        if (adjacent(U[i], U[j])) {
          ladj[i] |= 1u << j;
          ladj[j] |= 1u << i;
        }
    const std::uint32_t full = (1u << c) - 1;  // c <= 30 by the guard above
    // unordered bipartitions with U[0] pinned to S
    for (std::uint32_t m = 0; m + 1 < (1u << (c - 1)); ++m) {
      std::uint32_t smask = 1u | (m << 1);
      std::uint32_t tmask = full & ~smask;
      int sc = __builtin_popcount(smask), tc = __builtin_popcount(tmask);
      if (!feasible[sc][tc]) continue;
      int ecount = 0;
      for (int i = 0; i < c; ++i)
        if (smask & (1u << i)) ecount += __builtin_popcount(ladj[i] & tmask);
      double value = ecount / d;
      if (value > bound[sc][tc]) {
        SparsenessWitness w;
        for (int i = 0; i < c; ++i)
          ((smask >> i) & 1 ? w.S : w.T).push_back(U[i]);
        std::sort(w.S.begin(), w.S.end());
        std::sort(w.T.begin(), w.T.end());
        w.value = value;
        w.bound = bound[sc][tc];
        witness = std::move(w);
        return false;
      }
    }
    return true;
  };

  enumerate_connected_subsets(g, 2, max_feasible, visit);
  return witness;
}

double alpha_threshold(int k, double d) {
  if (d < 2) throw ParameterError("alpha_k(d) needs d >= 2");
  return 10.0 * std::sqrt(static_cast<double>(k) * k * std::log2(d) / d);
}

bool expander_implies_sparse_check(const Graph& g, double lambda) {
  auto dopt = g.regular_degree();
  if (!dopt) throw OperatorError("expander-implies-sparse needs a regular graph");
  const int d = *dopt;
  if (d < 3) throw HypothesisError("claim hypothesis d >= 3 fails");
  SpectrumReport rep = spectrum(WalkOperator::from_graph(g));
  if (lambda + kSpectralTol < rep.two_sided)
    throw HypothesisError("lambda below the measured two-sided expansion");
  if (!(lambda > 1.0 / std::sqrt(static_cast<double>(d))))
    throw HypothesisError("claim hypothesis lambda > 1/sqrt(d) fails");
  const int t = static_cast<int>(std::floor(std::log2(static_cast<double>(g.n))));
  return !is_sparse(g, 2.0 * lambda, std::max(1, t)).has_value();
}

bool tensor_spectrum_check(const std::vector<double>& g_spec, const std::vector<double>& h_spec,
                           const std::vector<double>& product_spec) {
  if (g_spec.size() * h_spec.size() != product_spec.size())
    throw OperatorError("tensor spectrum size mismatch");
  std::vector<double> expect;
  expect.reserve(product_spec.size());
  for (double a : g_spec)
    for (double b : h_spec) expect.push_back(a * b);
  std::sort(expect.begin(), expect.end());
  std::vector<double> got = product_spec;
  std::sort(got.begin(), got.end());
  for (size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - expect[i]) > kSpectralTol) return false;
  return true;
}

SkeletonSpectrum skeleton_spectrum(const Graph& g) {
  if (g.n == 0) throw OperatorError("empty graph");
  SkeletonSpectrum out;
  out.connected = g.connected();
  auto d = g.regular_degree();
  out.regular = d.has_value() && *d >= 1;
  if (out.regular) {
    out.report = spectrum(WalkOperator::from_graph(g));
    return out;
  }
  // symmetric normalization covers irregular skeletons and isolated vertices
  Eigen::VectorXd invsqrt(g.n);
  for (int v = 0; v < g.n; ++v) {
    double deg = static_cast<double>(g.adj[v].size());
    invsqrt(v) = deg > 0 ? 1.0 / std::sqrt(deg) : 0.0;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.n, g.n);
  for (const auto& [u, v] : g.edges) {
    m(u, v) = invsqrt(u) * invsqrt(v);
    m(v, u) = m(u, v);
  }
  out.report = spectrum(m);
  return out;
}

double hdx_lambda(const SimplicialComplex& X) {
  double worst = skeleton_spectrum(skeleton_graph(X)).report.two_sided;
  for (int l = 0; l <= X.dimension() - 2; ++l) {
    for (const Face& sigma : X.faces(l)) {
      LinkView lv = X.link(sigma);
      worst = std::max(worst,
                       skeleton_spectrum(skeleton_graph(lv.complex())).report.two_sided);
    }
  }
  return worst;
}

}  // namespace hdx
