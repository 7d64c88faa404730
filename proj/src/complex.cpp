#include "hdx/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace hdx {

std::string face_key(const Face& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(f[i]);
  }
  return out;
}

Face parse_face_key(const std::string& key) {
  Face f;
  if (key.empty()) return f;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '-')) {
    if (part.empty()) throw DomainError("malformed face key: '" + key + "'");
    f.push_back(std::stoi(part));
  }
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i - 1] >= f[i]) throw DomainError("face key not strictly increasing: '" + key + "'");
  return f;
}

bool face_less(const Face& a, const Face& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Canonicalize one input face: sort and reject repeated vertices / bad ids.
Face canonical_face(Face f) {
  std::sort(f.begin(), f.end());
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) throw DomainError("negative vertex id in face " + face_key(f));
    if (i && f[i] == f[i - 1])
      throw SelfLoopError("face " + face_key(f) + " repeats vertex " + std::to_string(f[i]));
  }
  return f;
}

std::vector<Face> boundary_level(const std::vector<Face>& faces) {
  std::set<Face> out;
  Face sub;
  for (const Face& f : faces) {
    for (size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      out.insert(sub);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

SimplicialComplex SimplicialComplex::from_top_faces(int k, std::vector<Face> top_faces,
                                                    std::optional<int> declared_vertices) {
  if (k < 0) throw DimensionError("dimension must be non-negative");
  if (top_faces.empty()) throw DimensionError("a complex needs at least one top face");

  for (Face& f : top_faces) {
    if (static_cast<int>(f.size()) != k + 1)
      throw DimensionError("top face " + face_key(f) + " has " + std::to_string(f.size()) +
                           " vertices, expected " + std::to_string(k + 1));
    f = canonical_face(std::move(f));
  }
  std::sort(top_faces.begin(), top_faces.end(), face_less);
  for (size_t i = 1; i < top_faces.size(); ++i)
    if (top_faces[i] == top_faces[i - 1])
      throw MultifaceError("duplicate top face " + face_key(top_faces[i]));

  std::vector<std::vector<Face>> levels(k + 1);
  levels[k] = std::move(top_faces);
  for (int l = k; l >= 1; --l) levels[l - 1] = boundary_level(levels[l]);

  int max_id = 0;
  for (const Face& v : levels[0]) max_id = std::max(max_id, v[0]);
  int n = max_id + 1;
  if (declared_vertices) {
    if (*declared_vertices < n)
      throw DomainError("vertex id " + std::to_string(max_id) + " exceeds declared count " +
                        std::to_string(*declared_vertices));
    n = *declared_vertices;
  }
  if (static_cast<int>(levels[0].size()) != n) {
    // some vertex of the universe 0..n-1 appears in no top face
    std::vector<bool> seen(n, false);
    for (const Face& v : levels[0]) seen[v[0]] = true;
    for (int i = 0; i < n; ++i)
      if (!seen[i])
        throw PurityError("vertex " + std::to_string(i) + " is contained in no top face");
  }

  SimplicialComplex X;
  X.k_ = k;
  X.n_ = n;
  X.levels_ = std::move(levels);
  X.validate();
  return X;
}

SimplicialComplex SimplicialComplex::from_levels(int k, int n,
                                                 std::vector<std::vector<Face>> levels,
                                                 bool trusted) {
  SimplicialComplex X;
  X.k_ = k;
  X.n_ = n;
  X.levels_ = std::move(levels);
  if (!trusted) X.validate();
  return X;
}

const std::vector<Face>& SimplicialComplex::faces(int level) const {
  if (level < 0 || level > k_)
    throw LevelError("level " + std::to_string(level) + " out of range [0," +
                     std::to_string(k_) + "]");
  return levels_[level];
}

bool SimplicialComplex::contains(const Face& f) const {
  if (f.empty()) return true;
  int level = static_cast<int>(f.size()) - 1;
  if (level > k_) return false;
  const auto& lv = levels_[level];
  auto it = std::lower_bound(lv.begin(), lv.end(), f, face_less);
  return it != lv.end() && *it == f;
}

int SimplicialComplex::face_index(const Face& f) const {
  if (f.empty()) throw FaceNotFoundError("the empty face has no level index");
  int level = static_cast<int>(f.size()) - 1;
  if (level > k_) throw FaceNotFoundError("face " + face_key(f) + " not in complex");
  const auto& lv = levels_[level];
  auto it = std::lower_bound(lv.begin(), lv.end(), f, face_less);
  if (it == lv.end() || *it != f)
    throw FaceNotFoundError("face " + face_key(f) + " not in complex");
  return static_cast<int>(it - lv.begin());
}

std::int64_t SimplicialComplex::degree(const Face& sigma) const {
  if (sigma.empty()) return n_;
  if (!contains(sigma)) throw FaceNotFoundError("face " + face_key(sigma) + " not in complex");
  int up = static_cast<int>(sigma.size());  // level of the containing faces
  if (up > k_) return 0;
  std::int64_t count = 0;
  for (const Face& tau : levels_[up])
    if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) ++count;
  return count;
}

RegularityProfile SimplicialComplex::regularity_profile() const {
  RegularityProfile p;
  p.degrees.assign(k_, 0);
  for (int l = 0; l < k_; ++l) {
    std::vector<std::int64_t> deg(levels_[l].size(), 0);
    // count incidences from one level up instead of per-face scans
    for (const Face& tau : levels_[l + 1]) {
      Face sub;
      for (size_t drop = 0; drop < tau.size(); ++drop) {
        sub.clear();
        for (size_t i = 0; i < tau.size(); ++i)
          if (i != drop) sub.push_back(tau[i]);
        auto it = std::lower_bound(levels_[l].begin(), levels_[l].end(), sub, face_less);
        ++deg[it - levels_[l].begin()];
      }
    }
    for (size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] != deg[0]) {
        p.regular = false;
        p.offending_face = levels_[l][i];
        p.degree_seen = deg[i];
        p.degree_expected = deg[0];
        p.degrees.clear();
        return p;
      }
    }
    p.degrees[l] = deg.empty() ? 0 : deg[0];
  }
  p.regular = true;
  return p;
}

LinkView SimplicialComplex::link(const Face& sigma) const {
  LinkView lv;
  lv.sigma = sigma;
  lv.base = this;
  if (sigma.empty()) {
    lv.to_parent.resize(n_);
    std::iota(lv.to_parent.begin(), lv.to_parent.end(), 0);
    lv.complex_ = std::make_unique<SimplicialComplex>(*this);
    return lv;
  }
  if (!contains(sigma)) throw FaceNotFoundError("face " + face_key(sigma) + " not in complex");
  const int s = static_cast<int>(sigma.size());
  if (s > k_) throw DimensionError("link of a top face is the empty complex");

  const int link_dim = k_ - s;
  std::vector<std::vector<Face>> lev(link_dim + 1);
  Face rest;
  for (int j = 0; j <= link_dim; ++j) {
    // faces tau of size s + j + 1 containing sigma, recorded as tau \ sigma
    for (const Face& tau : levels_[s + j]) {
      if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
      rest.clear();
      std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                          std::back_inserter(rest));
      lev[j].push_back(rest);
    }
  }
  lv.to_parent.reserve(lev[0].size());
  for (const Face& v : lev[0]) lv.to_parent.push_back(v[0]);

  // re-index to dense ids
  for (auto& level : lev) {
    for (Face& f : level)
      for (int& v : f) v = lv.local_of_parent(v);
    std::sort(level.begin(), level.end(), face_less);
  }
  lv.complex_ = std::make_unique<SimplicialComplex>(
      from_levels(link_dim, static_cast<int>(lv.to_parent.size()), std::move(lev),
                  /*trusted=*/true));
  return lv;
}

SimplicialComplex SimplicialComplex::skeleton(int j) const {
  if (j < 0 || j > k_)
    throw LevelError("skeleton level " + std::to_string(j) + " out of range");
  std::vector<std::vector<Face>> lev(levels_.begin(), levels_.begin() + j + 1);
  return from_levels(j, n_, std::move(lev), /*trusted=*/true);
}

std::vector<Face> SimplicialComplex::codim2_faces() const {
  if (k_ >= 2) return levels_[k_ - 2];
  return {Face{}};
}

void SimplicialComplex::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw DomainError("label table size does not match vertex count");
  labels_ = std::move(labels);
}

void SimplicialComplex::validate() const {
  if (static_cast<int>(levels_.size()) != k_ + 1)
    throw DimensionError("level table does not match dimension");
  if (!levels_.empty() && static_cast<int>(levels_[0].size()) != n_)
    throw PurityError("vertex count disagrees with level 0");
  for (int l = 0; l <= k_; ++l) {
    const auto& lv = levels_[l];
    if (lv.empty()) throw PurityError("level " + std::to_string(l) + " is empty");
    for (size_t i = 0; i < lv.size(); ++i) {
      const Face& f = lv[i];
      if (static_cast<int>(f.size()) != l + 1)
        throw DimensionError("face " + face_key(f) + " listed at level " + std::to_string(l));
      for (size_t j = 0; j < f.size(); ++j) {
        if (f[j] < 0 || f[j] >= n_) throw DomainError("vertex id out of range in " + face_key(f));
        if (j && f[j - 1] >= f[j]) throw SelfLoopError("face " + face_key(f) + " not strict");
      }
      if (i && !face_less(lv[i - 1], f))
        throw MultifaceError("level " + std::to_string(l) + " not sorted/duplicate-free at " +
                             face_key(f));
    }
  }
  // downward closure
  Face sub;
  for (int l = 1; l <= k_; ++l) {
    for (const Face& f : levels_[l]) {
      for (size_t drop = 0; drop < f.size(); ++drop) {
        sub.clear();
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        const auto& below = levels_[l - 1];
        auto it = std::lower_bound(below.begin(), below.end(), sub, face_less);
        if (it == below.end() || *it != sub)
          throw PurityError("closure violation: " + face_key(sub) + " missing below " +
                            face_key(f));
      }
    }
  }
  // purity: every face extends one level up (iterated, it reaches level k)
  for (int l = 0; l < k_; ++l) {
    std::vector<bool> extended(levels_[l].size(), false);
    for (const Face& tau : levels_[l + 1]) {
      for (size_t drop = 0; drop < tau.size(); ++drop) {
        sub.clear();
        for (size_t i = 0; i < tau.size(); ++i)
          if (i != drop) sub.push_back(tau[i]);
        auto it = std::lower_bound(levels_[l].begin(), levels_[l].end(), sub, face_less);
        extended[it - levels_[l].begin()] = true;
      }
    }
    for (size_t i = 0; i < extended.size(); ++i)
      if (!extended[i])
        throw PurityError("face " + face_key(levels_[l][i]) + " extends to no top face");
  }
}

SimplicialComplex complete_complex(int n, int k) {
  if (k < 1) throw DimensionError("complete complex needs dimension >= 1");
  if (n <= k) throw DimensionError("complete complex needs n >= k+1");
  std::vector<std::vector<Face>> levels(k + 1);
  for (int l = 0; l <= k; ++l) {
    // all (l+1)-subsets of {0..n-1} in lexicographic order
    Face f(l + 1);
    std::iota(f.begin(), f.end(), 0);
    while (true) {
      levels[l].push_back(f);
      int i = l;
      while (i >= 0 && f[i] == n - 1 - (l - i)) --i;
      if (i < 0) break;
      ++f[i];
      for (int j = i + 1; j <= l; ++j) f[j] = f[j - 1] + 1;
    }
  }
  return SimplicialComplex::from_levels(k, n, std::move(levels), /*trusted=*/true);
}

// --- LinkView out-of-line members (SimplicialComplex is complete here) ---

LinkView::LinkView() = default;
LinkView::LinkView(LinkView&&) noexcept = default;
LinkView& LinkView::operator=(LinkView&&) noexcept = default;
LinkView::~LinkView() = default;

LinkView::LinkView(const LinkView& other)
    : sigma(other.sigma), base(other.base), to_parent(other.to_parent) {
  if (other.complex_) complex_ = std::make_unique<SimplicialComplex>(*other.complex_);
}

LinkView& LinkView::operator=(const LinkView& other) {
  if (this == &other) return *this;
  sigma = other.sigma;
  base = other.base;
  to_parent = other.to_parent;
  complex_ = other.complex_ ? std::make_unique<SimplicialComplex>(*other.complex_) : nullptr;
  return *this;
}

int LinkView::local_of_parent(int parent_vertex) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_vertex);
  if (it == to_parent.end() || *it != parent_vertex) return -1;
  return static_cast<int>(it - to_parent.begin());
}

Face LinkView::to_parent_face(const Face& local) const {
  Face out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_parent.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hdx
