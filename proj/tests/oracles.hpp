#pragma once

#include <gmpxx.h>

#include <vector>

#include "hdx/graph.hpp"

namespace hdxtest {

// Integer-matrix oracle: Tr((d * A^f)^r) counted in exact integers, so the
// expected trace under a complete signing is trace / d^r with no rounding.
inline mpz_class signed_trace_power(const hdx::Graph& g, const hdx::EdgeSigning& f, int r) {
  const int n = g.n;
  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    A[u][v] = f.value(e);
    A[v][u] = f.value(e);
  }
  auto mul = [n](const auto& X, const auto& Y) {
    std::vector<std::vector<mpz_class>> Z(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (X[i][k] != 0)
          for (int j = 0; j < n; ++j) Z[i][j] += X[i][k] * Y[k][j];
    return Z;
  };
  auto P = A;
  for (int step = 1; step < r; ++step) P = mul(P, A);
  mpz_class tr = 0;
  for (int i = 0; i < n; ++i) tr += P[i][i];
  return tr;
}

inline mpq_class trace_oracle(const hdx::Graph& g, const hdx::EdgeSigning& f, int r) {
  mpz_class dr;
  mpz_ui_pow_ui(dr.get_mpz_t(), *g.regular_degree(), r);
  mpq_class q(signed_trace_power(g, f, r));
  q /= mpq_class(dr);
  return q;
}

// Exhaustive-completion oracle for partial signings: average the exact trace
// over all 2^u completions.
inline mpq_class partial_trace_oracle(const hdx::Graph& g, const hdx::EdgeSigning& partial,
                                      int r) {
  std::vector<int> free_edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (partial.value(e) == 0) free_edges.push_back(e);
  const int u = static_cast<int>(free_edges.size());
  mpq_class sum = 0;
  for (int mask = 0; mask < (1 << u); ++mask) {
    hdx::EdgeSigning full = partial;
    for (int i = 0; i < u; ++i) full.set(free_edges[i], (mask >> i) & 1 ? 1 : -1);
    sum += trace_oracle(g, full, r);
  }
  sum /= mpq_class(1 << u);
  return sum;
}

}  // namespace hdxtest
