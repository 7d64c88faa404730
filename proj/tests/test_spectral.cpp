#include "doctest.h"
#include "hdx/lifting.hpp"
#include "hdx/spectral.hpp"
#include "testutil.hpp"

#include <cmath>
#include <set>

using namespace hdx;
using namespace hdxtest;

TEST_CASE("walk spectra of small graphs") {
  SpectrumReport k4 = spectrum(WalkOperator::from_graph(complete_graph(4)));
  REQUIRE(k4.eigenvalues.size() == 4);
  CHECK(k4.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-9));
  for (int i = 1; i < 4; ++i)
    CHECK(k4.eigenvalues[i] == doctest::Approx(-1.0 / 3).epsilon(1e-9));
  CHECK(k4.two_sided == doctest::Approx(1.0 / 3).epsilon(1e-9));

  SpectrumReport c4 = spectrum(WalkOperator::from_graph(cycle_graph(4)));
  CHECK(c4.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(c4.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(c4.eigenvalues[2] == doctest::Approx(0.0));
  CHECK(c4.eigenvalues[3] == doctest::Approx(-1.0));
  CHECK(c4.two_sided == doctest::Approx(1.0));
}

TEST_CASE("signed spectrum of the all-minus triangle") {
  Graph c3 = cycle_graph(3);
  auto op = SignedWalkOperator::make(c3, EdgeSigning::constant(3, -1));
  SpectrumReport rep = spectrum(op);
  CHECK(rep.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("all-plus signing matches the unsigned operator exactly") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Graph g = random_regular_graph(10, 3, seed);
    auto plus = spectrum(SignedWalkOperator::make(g, EdgeSigning::constant(g.edge_count(), 1)));
    auto walk = spectrum(WalkOperator::from_graph(g));
    CHECK(plus.eigenvalues == walk.eigenvalues);
  }
}

TEST_CASE("walk operator invariants") {
  Graph g = random_regular_graph(12, 4, 7);
  WalkOperator op = WalkOperator::from_graph(g);
  for (int v = 0; v < op.size; ++v) {
    CHECK(op.entries.row(v).sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(op.entries(v, v) == 0.0);
  }
  SpectrumReport rep = spectrum(op);
  CHECK(rep.eigenvalues.front() == doctest::Approx(1.0).epsilon(1e-9));
  for (double ev : rep.eigenvalues) {
    CHECK(ev <= 1.0 + 1e-9);
    CHECK(ev >= -1.0 - 1e-9);
  }
  CHECK_THROWS_AS(WalkOperator::from_graph(Graph::from_edges(3, {{0, 1}})), OperatorError);

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(spectrum(bad), OperatorError);
}

TEST_CASE("bilinear form on K4") {
  Graph k4 = complete_graph(4);
  auto op = SignedWalkOperator::make(k4, EdgeSigning::constant(6, 1));
  CHECK(bilinear_form(op, {0}, {1}) == doctest::Approx(1.0 / 3));
  CHECK(bilinear_form(op, {0}, {1, 2}) == doctest::Approx(2.0 / 3));
  CHECK(bilinear_form(op, {}, {1, 2}) == 0.0);
  EdgeSigning partial(6);
  partial.set(0, 1);
  auto pop = SignedWalkOperator::make(k4, partial);
  CHECK_THROWS_AS(bilinear_form(pop, {0}, {2}), PartialSigningError);
}

TEST_CASE("bilinear form obeys Cauchy-Schwarz") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_regular_graph(10, 4, 100 + trial);
    EdgeSigning f = random_edge_signing(g.edge_count(), 200 + trial);
    auto op = SignedWalkOperator::make(g, f);
    std::vector<int> S, T;
    for (int v = 0; v < g.n; ++v) {
      int r = rng() % 3;
      if (r == 0) S.push_back(v);
      if (r == 1) T.push_back(v);
    }
    if (S.empty() || T.empty()) continue;
    double form = std::abs(bilinear_form(op, S, T));
    CHECK(form <= std::sqrt(double(S.size()) * T.size()) + 1e-12);
  }
}

namespace {

// Brute force over every disjoint pair with |S ∪ T| <= t whose union induces
// a connected subgraph. Independent of the anchored enumeration in is_sparse.
bool sparse_brute_force(const Graph& g, double beta, int t) {
  const int n = g.n;
  const double d = *g.regular_degree();
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) > t) continue;
    // connectivity of the induced subgraph on mask
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    std::vector<int> stack{verts[0]};
    std::set<int> seen{verts[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adj[v])
        if ((mask & (1 << u)) && !seen.count(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (static_cast<int>(seen.size()) != static_cast<int>(verts.size())) continue;
    const int c = static_cast<int>(verts.size());
    for (int split = 0; split < (1 << c); ++split) {
      std::vector<int> S, T;
      for (int i = 0; i < c; ++i) ((split >> i) & 1 ? S : T).push_back(verts[i]);
      if (S.empty() || T.empty()) continue;
      int e = 0;
      for (int s : S)
        for (int u : T)
          if (g.has_edge(s, u)) ++e;
      if (e / d > beta * std::sqrt(double(S.size()) * T.size())) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("connected subset enumeration visits each set once") {
  // complete graph: every subset is connected
  Graph k8 = complete_graph(8);
  std::set<std::vector<int>> seen;
  long long visits = 0;
  enumerate_connected_subsets(k8, 1, 3, [&](const std::vector<int>& U) {
    std::vector<int> s = U;
    std::sort(s.begin(), s.end());
    CHECK(seen.insert(s).second);  // no duplicates
    ++visits;
    return true;
  });
  CHECK(visits == 8 + 28 + 56);  // C(8,1) + C(8,2) + C(8,3)

  // path graph: connected subsets are exactly the arcs
  Graph p6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  long long arcs = 0;
  enumerate_connected_subsets(p6, 2, 4, [&](const std::vector<int>&) {
    ++arcs;
    return true;
  });
  CHECK(arcs == 5 + 4 + 3);  // arcs of sizes 2..4

  // early stop is honored
  long long count = 0;
  enumerate_connected_subsets(k8, 1, 3, [&](const std::vector<int>&) {
    return ++count < 5;
  });
  CHECK(count == 5);
}

TEST_CASE("enumeration agrees with the bitmask brute force on random graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    Graph g = random_regular_graph(10, 3, 3000 + seed, /*require_connected=*/false);
    std::set<std::vector<int>> enumerated;
    enumerate_connected_subsets(g, 1, 4, [&](const std::vector<int>& U) {
      std::vector<int> s = U;
      std::sort(s.begin(), s.end());
      CHECK(enumerated.insert(s).second);
      return true;
    });
    std::set<std::vector<int>> brute;
    for (int mask = 1; mask < (1 << 10); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) > 4) continue;
      std::vector<int> verts;
      for (int v = 0; v < 10; ++v)
        if (mask & (1 << v)) verts.push_back(v);
      // BFS connectivity inside the mask
      std::vector<int> stack{verts[0]};
      std::set<int> seen{verts[0]};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
          if ((mask & (1 << u)) && !seen.count(u)) {
            seen.insert(u);
            stack.push_back(u);
          }
      }
      if (seen.size() == verts.size()) brute.insert(verts);
    }
    CHECK(enumerated == brute);
  }
}

TEST_CASE("sparseness on K4") {
  Graph k4 = complete_graph(4);
  CHECK(!is_sparse(k4, 1.0, 2).has_value());
  CHECK(sparse_brute_force(k4, 1.0, 2));

  auto w = is_sparse(k4, 0.1, 2);
  REQUIRE(w.has_value());
  CHECK(w->S == std::vector<int>{0});
  CHECK(w->T == std::vector<int>{1});
  CHECK(w->value == doctest::Approx(1.0 / 3));
  CHECK(!sparse_brute_force(k4, 0.1, 2));
}

TEST_CASE("beta >= 1 never has a witness") {
  for (std::uint64_t seed : {5u, 6u}) {
    Graph g = random_regular_graph(10, 3, seed);
    CHECK(!is_sparse(g, 1.0, 4).has_value());
  }
}

TEST_CASE("sparseness agrees with brute force and is monotone in beta") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = random_regular_graph(8, 3, 40 + seed);
    for (double beta : {0.2, 0.35, 0.5, 0.8}) {
      const bool lib = !is_sparse(g, beta, 3).has_value();
      CHECK(lib == sparse_brute_force(g, beta, 3));
      if (lib) CHECK(!is_sparse(g, beta + 0.1, 3).has_value());
    }
  }
}

TEST_CASE("witness fields are consistent") {
  Graph g = random_regular_graph(10, 4, 77);
  auto w = is_sparse(g, 0.05, 3);
  REQUIRE(w.has_value());
  CHECK(w->value > w->bound);
  // the witness really is a disjoint pair bounded by t
  std::set<int> su(w->S.begin(), w->S.end());
  for (int v : w->T) CHECK(!su.count(v));
  CHECK(w->S.size() + w->T.size() <= 3);
}

TEST_CASE("alpha threshold") {
  CHECK(alpha_threshold(1, 4) == doctest::Approx(7.0711).epsilon(1e-4));
  CHECK(alpha_threshold(2, 4) == doctest::Approx(14.142).epsilon(1e-4));
  CHECK(alpha_threshold(1, std::pow(2.0, 100)) ==
        doctest::Approx(10.0 * std::sqrt(100.0 / std::pow(2.0, 100))));
  CHECK(alpha_threshold(1, 1 << 20) < alpha_threshold(1, 1 << 10));
  CHECK_THROWS_AS(alpha_threshold(1, 1), ParameterError);
}

TEST_CASE("expander implies sparse") {
  Graph k8 = complete_graph(8);
  CHECK_THROWS_AS(expander_implies_sparse_check(k8, 1.0 / 7), HypothesisError);
  CHECK(expander_implies_sparse_check(k8, 0.4));

  Graph g = random_regular_graph(16, 3, 123);
  double lam = spectrum(WalkOperator::from_graph(g)).two_sided;
  if (lam > 1.0 / std::sqrt(3.0)) CHECK(expander_implies_sparse_check(g, lam));
}

TEST_CASE("tensor spectrum check") {
  // H a single looped vertex: spec {1} leaves the spectrum unchanged
  std::vector<double> g_spec{1.0, 0.25, -0.5};
  CHECK(tensor_spectrum_check(g_spec, {1.0}, g_spec));

  // spec {1,0} pads with zeros
  std::vector<double> padded{1.0, 0.25, -0.5, 0.0, 0.0, 0.0};
  CHECK(tensor_spectrum_check(g_spec, {1.0, 0.0}, padded));

  // C4 (x) C4 against an explicit tensor graph eigensolve
  Graph c4 = cycle_graph(4);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, a2] : c4.edges)
    for (auto [b, b2] : c4.edges) {
      auto add = [&](int x1, int y1, int x2, int y2) {
        int u = 4 * x1 + y1, v = 4 * x2 + y2;
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
      };
      add(a, b, a2, b2);
      add(a, b2, a2, b);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph tensor = Graph::from_edges(16, std::move(edges));
  auto c4_spec = spectrum(WalkOperator::from_graph(c4)).eigenvalues;
  auto prod_spec = spectrum(WalkOperator::from_graph(tensor)).eigenvalues;
  CHECK(tensor_spectrum_check(c4_spec, c4_spec, prod_spec));

  CHECK_THROWS_AS(tensor_spectrum_check(g_spec, {1.0, 0.0}, g_spec), OperatorError);
  CHECK(!tensor_spectrum_check({1.0, 0.0}, {1.0, 0.0}, {1.0, 0.5, 0.0, 0.0}));
}

TEST_CASE("hdx lambda of complete complexes") {
  CHECK(hdx_lambda(complete_complex(6, 2)) == doctest::Approx(0.25).epsilon(1e-9));
  // worst of K5 global (1/4... ) for (5,3): edge links K3 give 1/2
  CHECK(hdx_lambda(complete_complex(5, 3)) == doctest::Approx(0.5).epsilon(1e-9));
}
