#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"

namespace hdx {

/// Absolute tolerance for every spectral comparison in this library.
inline constexpr double kSpectralTol = 1e-8;

/// Full eigenvalue list of a walk operator, sorted descending, with the
/// two standard expansion summaries.
struct SpectrumReport {
  std::vector<double> eigenvalues;  // lambda_1 >= ... >= lambda_m
  double two_sided = 0.0;           // max{lambda_2, |lambda_m|}
  double one_sided = 0.0;           // lambda_2

  double top() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  /// Operator norm: max |lambda_i| including the top eigenvalue.
  double norm() const;
};

/// Eigensolve of a symmetric matrix; OperatorError on asymmetric input.
SpectrumReport spectrum(const Eigen::MatrixXd& symmetric);

/// Degree-normalized random-walk matrix of a regular graph.
struct WalkOperator {
  int size = 0;
  int degree = 0;
  Eigen::MatrixXd entries;

  static WalkOperator from_graph(const Graph& g);
};

/// Edge-signed walk matrix A^f with entries f(uv)/d. The signing may be
/// partial; materializing entries or a spectrum requires completeness.
struct SignedWalkOperator {
  Graph graph;
  EdgeSigning signing;
  int degree = 0;

  static SignedWalkOperator make(Graph g, EdgeSigning f);
  int size() const { return graph.n; }
  Eigen::MatrixXd entries() const;  // PartialSigningError when incomplete
};

SpectrumReport spectrum(const WalkOperator& op);
SpectrumReport spectrum(const SignedWalkOperator& op);

/// <1_S, A^f 1_T> = (1/d) sum over ordered pairs (v,u) with {v,u} in E of
/// f(u,v) 1_S(v) 1_T(u). Disjointness of S and T is the caller's business.
double bilinear_form(const SignedWalkOperator& op, const std::vector<int>& S,
                     const std::vector<int>& T);
double bilinear_form(const WalkOperator& op, const std::vector<int>& S,
                     const std::vector<int>& T);

/// A violating pair for (beta,t)-sparseness: disjoint S, T with connected
/// union whose bilinear form under the plain walk operator exceeds the bound.
struct SparsenessWitness {
  std::vector<int> S, T;
  double value = 0.0;  // |<1_S, A 1_T>|
  double bound = 0.0;  // beta * sqrt(|S||T|)
};

/// Checks (beta,t)-sparseness of a regular graph by enumerating connected
/// vertex sets U with |U| <= t (minimum-vertex anchored growth, so each set
/// appears once) and all unordered bipartitions U = S ⊔ T. Returns the first
/// witness in enumeration order, or nothing when the graph is sparse.
std::optional<SparsenessWitness> is_sparse(const Graph& g, double beta, int t);

/// Visits connected vertex subsets with min_size <= |U| <= max_size, each
/// exactly once, in canonical order. The visitor returns false to stop.
void enumerate_connected_subsets(const Graph& g, int min_size, int max_size,
                                 const std::function<bool(const std::vector<int>&)>& visit);

/// alpha_k(d) = 10 sqrt(k^2 log2(d) / d).
double alpha_threshold(int k, double d);

/// Oracle for "a lambda-expander is (2 lambda, log2 n)-sparse": validates the
/// hypotheses (d >= 3, lambda >= measured two-sided, lambda > 1/sqrt(d)) and
/// runs the sparseness scan. HypothesisError when the hypotheses fail.
bool expander_implies_sparse_check(const Graph& g, double lambda);

/// Verifies spec(G (x) H) = {mu * nu} as multisets within tolerance.
bool tensor_spectrum_check(const std::vector<double>& g_spec, const std::vector<double>& h_spec,
                           const std::vector<double>& product_spec);

/// Spectrum of a (possibly irregular or disconnected) 1-skeleton. Irregular
/// graphs use the symmetric normalization D^{-1/2} A D^{-1/2}, which has the
/// same spectrum as the walk operator where both exist.
struct SkeletonSpectrum {
  SpectrumReport report;
  bool regular = false;
  bool connected = false;
};
SkeletonSpectrum skeleton_spectrum(const Graph& g);

/// Worst two-sided lambda over the 1-skeletons of all links of dimension-
/// (<= k-2) faces, including the empty face. This is the HDX expansion of X.
double hdx_lambda(const SimplicialComplex& X);

}  // namespace hdx
