#include "hdx/lifting.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace hdx {

FaceSigning FaceSigning::constant(int face_count, int value) {
  FaceSigning s(face_count);
  for (int i = 0; i < face_count; ++i) s.set(i, value);
  return s;
}

void FaceSigning::set(int idx, int v) {
  if (v != 1 && v != -1) throw ParameterError("face sign must be +1 or -1");
  values_.at(idx) = static_cast<signed char>(v);
}

bool FaceSigning::complete() const {
  for (signed char v : values_)
    if (v == 0) return false;
  return true;
}

int FaceSigning::unassigned_count() const {
  int c = 0;
  for (signed char v : values_)
    if (v == 0) ++c;
  return c;
}

int face_sign(const Face& lifted_face) {
  int s = 1;
  for (int w : lifted_face) s *= vertex_sign(w);
  return s;
}

Face project_face(const Face& lifted_face) {
  Face out;
  out.reserve(lifted_face.size());
  for (int w : lifted_face) out.push_back(base_vertex(w));
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1])
      throw SelfLoopError("lifted face covers both fibers of vertex " + std::to_string(out[i]));
  return out;
}

Graph graph_induced_lift(const Graph& g, const EdgeSigning& f) {
  if (f.size() != g.edge_count()) throw DomainError("signing does not match the edge list");
  if (!f.complete()) throw PartialSigningError("graph lift needs a complete signing");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (f.value(e) == 1) {
      edges.emplace_back(lifted_vertex(u, 1), lifted_vertex(v, 1));
      edges.emplace_back(lifted_vertex(u, -1), lifted_vertex(v, -1));
    } else {
      edges.emplace_back(lifted_vertex(u, 1), lifted_vertex(v, -1));
      edges.emplace_back(lifted_vertex(u, -1), lifted_vertex(v, 1));
    }
  }
  return Graph::from_edges(2 * g.n, std::move(edges));
}

SimplicialComplex local_lift(const SimplicialComplex& X, const FaceSigning& f) {
  const int k = X.dimension();
  if (k < 1) throw DimensionError("local lift needs dimension >= 1");
  if (f.size() != static_cast<int>(X.faces(k).size()))
    throw DomainError("signing does not match X(k)");
  if (!f.complete()) throw PartialSigningError("local lift needs a complete signing");

  std::vector<std::vector<Face>> levels(k + 1);
  Face lifted;
  for (int l = 0; l <= k; ++l) {
    const auto& base_faces = X.faces(l);
    const int copies = 1 << (l + 1);
    levels[l].reserve(base_faces.size() * static_cast<size_t>(l == k ? copies / 2 : copies));
    for (size_t bi = 0; bi < base_faces.size(); ++bi) {
      const Face& base = base_faces[bi];
      for (int mask = 0; mask < copies; ++mask) {
        if (l == k) {
          // keep only sign vectors whose product matches f(base)
          int parity = __builtin_popcount(static_cast<unsigned>(mask)) & 1;
          int wanted = (f.value(static_cast<int>(bi)) == -1) ? 1 : 0;
          if (parity != wanted) continue;
        }
        lifted.clear();
        for (int i = 0; i <= l; ++i)
          lifted.push_back(2 * base[i] + ((mask >> i) & 1));
        levels[l].push_back(lifted);
      }
    }
    std::sort(levels[l].begin(), levels[l].end(), face_less);
  }
  // the lift is the trust boundary: full validation, not trusted
  return SimplicialComplex::from_levels(k, 2 * X.vertex_count(), std::move(levels));
}

InducedLink induced_link_signing(const SimplicialComplex& X, const FaceSigning& f,
                                 const Face& sigma, int sign) {
  const int k = X.dimension();
  if (static_cast<int>(sigma.size()) != std::max(0, k - 1))
    throw FaceNotFoundError("expected a (k-2)-face, got " + face_key(sigma));
  if (sign != 1 && sign != -1) throw ParameterError("face sign must be +1 or -1");
  if (f.size() != static_cast<int>(X.faces(k).size()))
    throw DomainError("signing does not match X(k)");

  InducedLink out;
  out.view = X.link(sigma);
  out.skel = skeleton_graph(out.view.complex());
  out.signing = EdgeSigning(out.skel.edge_count());
  out.edge_face.resize(out.skel.edge_count());
  Face tau;
  for (int e = 0; e < out.skel.edge_count(); ++e) {
    auto [a, b] = out.skel.edges[e];
    tau.clear();
    tau.push_back(out.view.to_parent[a]);
    tau.push_back(out.view.to_parent[b]);
    tau.insert(tau.end(), sigma.begin(), sigma.end());
    std::sort(tau.begin(), tau.end());
    const int fi = X.face_index(tau);
    out.edge_face[e] = fi;
    const int fv = f.value(fi);
    if (fv != 0) out.signing.set(e, sign * fv);
  }
  return out;
}

InducedLink induced_edge_signing(const SimplicialComplex& X, const FaceSigning& f,
                                 const Face& sigma_hat) {
  return induced_link_signing(X, f, project_face(sigma_hat), face_sign(sigma_hat));
}

namespace {

std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

bool check_link_structure(const SimplicialComplex& X, const FaceSigning& f,
                          const SimplicialComplex& X_hat, const Face& sigma_hat) {
  const int k = X.dimension();
  const int dim = static_cast<int>(sigma_hat.size()) - 1;
  if (dim > k - 2) throw LevelError("link structure is characterized for dim <= k-2");
  if (!sigma_hat.empty() && !X_hat.contains(sigma_hat))
    throw FaceNotFoundError("face " + face_key(sigma_hat) + " not in the lift");

  const Face sigma = project_face(sigma_hat);
  LinkView lift_link = X_hat.link(sigma_hat);
  LinkView base_link = X.link(sigma);
  const Graph lift_skel = skeleton_graph(lift_link.complex());
  const Graph base_skel = skeleton_graph(base_link.complex());

  // identification: lift-link vertex -> (index of base vertex in X_sigma, fiber bit)
  auto identify = [&](int local) {
    int w = lift_link.to_parent[local];
    int uidx = base_link.local_of_parent(base_vertex(w));
    if (uidx < 0)
      throw StructureViolation("lift link vertex " + std::to_string(w) +
                               " projects outside the base link of " + face_key(sigma));
    return 2 * uidx + (w % 2);
  };

  if (lift_skel.n != 2 * base_skel.n)
    throw StructureViolation("link of " + face_key(sigma_hat) + " has " +
                             std::to_string(lift_skel.n) + " vertices, expected " +
                             std::to_string(2 * base_skel.n));

  std::vector<std::pair<int, int>> got;
  got.reserve(lift_skel.edges.size());
  for (auto [a, b] : lift_skel.edges) {
    int ia = identify(a), ib = identify(b);
    got.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(got.begin(), got.end());

  std::vector<std::pair<int, int>> expect;
  if (dim == k - 2) {
    // Lemma on link structure, top case: the induced lift of the base link.
    InducedLink il = induced_link_signing(X, f, sigma, face_sign(sigma_hat));
    if (!il.signing.complete())
      throw PartialSigningError("link structure check needs a complete signing");
    Graph lifted = graph_induced_lift(il.skel, il.signing);
    expect = lifted.edges;
  } else {
    // tensor with the looped two-vertex complete graph: every fiber pair
    expect.reserve(4 * base_skel.edges.size());
    for (auto [u, v] : base_skel.edges)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          int x = 2 * u + a, y = 2 * v + b;
          expect.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(expect.begin(), expect.end());
  }

  if (got.size() != expect.size())
    throw StructureViolation("link of " + face_key(sigma_hat) + ": " +
                             std::to_string(got.size()) + " edges, expected " +
                             std::to_string(expect.size()));
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i] != expect[i])
      throw StructureViolation("link of " + face_key(sigma_hat) + ": edge " +
                               edge_str(got[i].first, got[i].second) + " vs expected " +
                               edge_str(expect[i].first, expect[i].second));
  return true;
}

bool spectrum_union_check(const Graph& g, const EdgeSigning& f) {
  Graph lift = graph_induced_lift(g, f);
  SpectrumReport lift_spec = spectrum(WalkOperator::from_graph(lift));
  SpectrumReport base_spec = spectrum(WalkOperator::from_graph(g));
  SpectrumReport signed_spec = spectrum(SignedWalkOperator::make(g, f));

  std::vector<double> expect = base_spec.eigenvalues;
  expect.insert(expect.end(), signed_spec.eigenvalues.begin(), signed_spec.eigenvalues.end());
  std::sort(expect.begin(), expect.end(), std::greater<>());

  for (size_t i = 0; i < expect.size(); ++i) {
    double diff = std::abs(expect[i] - lift_spec.eigenvalues[i]);
    if (diff > kSpectralTol)
      throw SpectralViolation("lift eigenvalue " + std::to_string(i) + " deviates by " +
                              std::to_string(diff));
  }
  return true;
}

FaceSigning random_signing(int face_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FaceSigning f(face_count);
  for (int i = 0; i < face_count; ++i) f.set(i, (rng() & 1ull) ? 1 : -1);
  return f;
}

EdgeSigning random_edge_signing(int edge_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeSigning f(edge_count);
  for (int i = 0; i < edge_count; ++i) f.set(i, (rng() & 1ull) ? 1 : -1);
  return f;
}

}  // namespace hdx
