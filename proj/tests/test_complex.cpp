#include "doctest.h"
#include "hdx/complex.hpp"

#include <algorithm>

using namespace hdx;

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("face keys") {
  CHECK(face_key({0, 3, 7}) == "0-3-7");
  CHECK(face_key({}) == "");
  CHECK(parse_face_key("0-3-7") == Face{0, 3, 7});
  CHECK(parse_face_key("") == Face{});
  CHECK_THROWS_AS(parse_face_key("3-1"), DomainError);
  CHECK_THROWS_AS(parse_face_key("1--2"), DomainError);
}

TEST_CASE("closure of the tetrahedron boundary") {
  auto X = SimplicialComplex::from_top_faces(2, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(X.vertex_count() == 4);
  CHECK(X.face_count(0) == 4);
  CHECK(X.face_count(1) == 6);
  CHECK(X.face_count(2) == 4);
  X.validate();
}

TEST_CASE("triangle graph as a 1-complex") {
  auto X = SimplicialComplex::from_top_faces(1, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(X.dimension() == 1);
  CHECK(X.vertex_count() == 3);
  CHECK(X.face_count(1) == 3);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(2, {{0, 1, 2}, {2, 1, 0}}), MultifaceError);
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(2, {{0, 1, 1}}), SelfLoopError);
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(2, {{0, 1, 2}}, 5), PurityError);
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(2, {{0, 1, 2}}, 2), DomainError);
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(2, {{0, 1}}), DimensionError);
  // implicit universe 0..max: a skipped id is an isolated vertex
  CHECK_THROWS_AS(SimplicialComplex::from_top_faces(1, {{0, 2}}), PurityError);
}

TEST_CASE("complete complex counts and profile") {
  auto X = complete_complex(4, 2);
  CHECK(X.face_count(0) == 4);
  CHECK(X.face_count(1) == 6);
  CHECK(X.face_count(2) == 4);
  auto p = X.regularity_profile();
  REQUIRE(p.regular);
  CHECK(p.degrees == std::vector<std::int64_t>{3, 2});

  auto Y = complete_complex(5, 3);
  auto py = Y.regularity_profile();
  REQUIRE(py.regular);
  CHECK(py.degrees == std::vector<std::int64_t>{4, 3, 2});

  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      auto Z = complete_complex(n, k);
      for (int l = 0; l <= k; ++l) CHECK(Z.face_count(l) == binom(n, l + 1));
    }

  CHECK_THROWS_AS(complete_complex(3, 3), DimensionError);
  CHECK_THROWS_AS(complete_complex(2, 2), DimensionError);
}

TEST_CASE("links of complete complexes") {
  auto X = complete_complex(6, 2);
  LinkView lv = X.link({0});
  CHECK(lv.complex().dimension() == 1);
  CHECK(lv.complex().vertex_count() == 5);
  CHECK(lv.complex().face_count(1) == 10);  // K5
  CHECK(lv.to_parent == std::vector<int>{1, 2, 3, 4, 5});
  // face-for-face equal to the complete graph on five vertices
  auto K5 = complete_complex(5, 1);
  for (const Face& sigma : X.faces(0))
    CHECK(X.link(sigma).complex().faces(1) == K5.faces(1));

  auto Y = complete_complex(5, 3);
  LinkView ed = Y.link({0, 1});
  CHECK(ed.complex().dimension() == 1);
  CHECK(ed.complex().vertex_count() == 3);
  CHECK(ed.complex().face_count(1) == 3);  // triangle

  LinkView whole = X.link({});
  CHECK(whole.complex().face_count(2) == X.face_count(2));

  CHECK_THROWS_AS(X.link({0, 7}), FaceNotFoundError);
}

TEST_CASE("link of a link matches the link of the union") {
  auto X = complete_complex(6, 3);
  const Face sigma{1};
  const Face tau_parent{4};
  LinkView l1 = X.link(sigma);
  int tau_local = l1.local_of_parent(tau_parent[0]);
  REQUIRE(tau_local >= 0);
  LinkView l2 = l1.complex().link({tau_local});
  LinkView direct = X.link({1, 4});
  REQUIRE(l2.complex().dimension() == direct.complex().dimension());
  for (int lev = 0; lev <= l2.complex().dimension(); ++lev) {
    const auto& nested = l2.complex().faces(lev);
    const auto& flat = direct.complex().faces(lev);
    REQUIRE(nested.size() == flat.size());
    for (size_t i = 0; i < nested.size(); ++i) {
      // translate both to parent ids of X and compare
      Face a = l1.to_parent_face(l2.to_parent_face(nested[i]));
      Face b = direct.to_parent_face(flat[i]);
      CHECK(a == b);
    }
  }
}

TEST_CASE("degree, skeleton, faces") {
  auto X = complete_complex(6, 2);
  CHECK(X.degree({0, 1}) == 4);
  CHECK(X.degree({0}) == 5);
  CHECK(X.degree({}) == 6);
  CHECK_THROWS_AS(X.degree({0, 9}), FaceNotFoundError);

  auto S = X.skeleton(1);
  CHECK(S.dimension() == 1);
  CHECK(S.face_count(1) == 15);  // K6
  S.validate();
  CHECK_THROWS_AS(X.skeleton(3), LevelError);
  CHECK_THROWS_AS(X.faces(5), LevelError);
}

TEST_CASE("codim2 faces") {
  auto X = complete_complex(5, 2);
  CHECK(X.codim2_faces().size() == 5);
  auto G = SimplicialComplex::from_top_faces(1, {{0, 1}, {1, 2}, {2, 0}});
  auto c = G.codim2_faces();
  REQUIRE(c.size() == 1);
  CHECK(c[0].empty());
  CHECK(G.link(c[0]).complex().face_count(1) == 3);
}

TEST_CASE("irregular profile carries a witness") {
  auto P = SimplicialComplex::from_top_faces(1, {{0, 1}, {1, 2}});
  auto p = P.regularity_profile();
  REQUIRE(!p.regular);
  CHECK(p.degree_seen != p.degree_expected);
}
