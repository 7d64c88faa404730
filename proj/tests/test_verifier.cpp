#include "doctest.h"
#include "hdx/verifier.hpp"
#include "testutil.hpp"

#include <algorithm>

using namespace hdx;
using namespace hdxtest;

TEST_CASE("certificate of the complete 2-complex on 6 vertices") {
  auto cert = certify_hdx(complete_complex(6, 2));
  CHECK(cert.dimension == 2);
  CHECK(cert.vertex_count == 6);
  CHECK(cert.face_counts == std::vector<std::int64_t>{6, 15, 20});
  REQUIRE(cert.profile.regular);
  CHECK(cert.profile.degrees == std::vector<std::int64_t>{5, 4});

  REQUIRE(cert.levels.size() == 2);
  CHECK(cert.levels[0].level == -1);
  CHECK(cert.levels[0].worst_two_sided == doctest::Approx(0.2).epsilon(1e-9));  // K6
  CHECK(cert.levels[1].level == 0);
  CHECK(cert.levels[1].links == 6);
  CHECK(cert.levels[1].worst_two_sided == doctest::Approx(0.25).epsilon(1e-9));  // K5
  CHECK(cert.global_two_sided == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(cert.link_diameter_min == 1);
}

TEST_CASE("certificate of the complete 3-complex on 5 vertices") {
  auto cert = certify_hdx(complete_complex(5, 3));
  REQUIRE(cert.levels.size() == 3);
  CHECK(cert.levels[0].worst_two_sided == doctest::Approx(0.25).epsilon(1e-9));      // K5
  CHECK(cert.levels[1].worst_two_sided == doctest::Approx(1.0 / 3).epsilon(1e-9));   // K4 links
  CHECK(cert.levels[2].worst_two_sided == doctest::Approx(0.5).epsilon(1e-9));       // K3 links
  CHECK(cert.global_two_sided == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("certificate of a single top face") {
  auto X = SimplicialComplex::from_top_faces(2, {{0, 1, 2}});
  auto cert = certify_hdx(X);
  CHECK(cert.levels[1].links == 3);
  // vertex links are single edges: two-sided lambda 1
  CHECK(cert.levels[1].worst_two_sided == doctest::Approx(1.0));
  CHECK(cert.link_diameter_min == 1);
}

TEST_CASE("lift laws hold for toolkit lifts") {
  auto X = complete_complex(5, 2);
  FaceSigning f = random_signing(static_cast<int>(X.face_count(2)), 41);
  auto Y = local_lift(X, f);
  LiftLawReport rep = verify_lift_laws(X, f, Y);
  for (const auto& law : rep.laws) {
    INFO(law.law, ": ", law.detail);
    CHECK(law.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("all-plus lifts disconnect links and still satisfy the laws") {
  auto X = complete_complex(4, 2);
  FaceSigning f = FaceSigning::constant(static_cast<int>(X.face_count(2)), 1);
  auto Y = local_lift(X, f);
  LiftLawReport rep = verify_lift_laws(X, f, Y);
  CHECK(rep.pass);
  // plus-fiber links carry the all-plus induced signing and split into two
  // copies; minus fibers see the all-minus signing and stay connected
  const auto& lvl = rep.lift_cert.levels[1];
  CHECK(lvl.disconnected == lvl.links / 2);
  CHECK(lvl.worst_two_sided == doctest::Approx(1.0));
}

TEST_CASE("deleted top face breaks the counting laws") {
  auto X = complete_complex(4, 2);
  FaceSigning f = random_signing(4, 43);
  auto Y = local_lift(X, f);
  std::vector<Face> tampered = Y.faces(2);
  tampered.pop_back();
  auto Y_bad = SimplicialComplex::from_top_faces(2, std::move(tampered));
  LiftLawReport rep = verify_lift_laws(X, f, Y_bad);
  CHECK(!rep.pass);
  auto fails = [&](const std::string& name) {
    auto it = std::find_if(rep.laws.begin(), rep.laws.end(),
                           [&](const LawResult& l) { return l.law == name; });
    return it != rep.laws.end() && !it->pass;
  };
  CHECK(fails("face-counts"));
  CHECK(fails("regularity"));
}

TEST_CASE("sign-flip corruption is caught by link structure, counts pass") {
  auto X = complete_complex(4, 2);
  FaceSigning f = random_signing(4, 47);
  FaceSigning wrong = f;
  wrong.set(0, -f.value(0));
  auto Y_bad = local_lift(X, wrong);
  LiftLawReport rep = verify_lift_laws(X, f, Y_bad);
  CHECK(!rep.pass);
  for (const auto& law : rep.laws) {
    if (law.law == "face-counts" || law.law == "regularity") CHECK(law.pass);
    if (law.law == "link-structure") CHECK(!law.pass);
  }
}

TEST_CASE("law selection restricts the report") {
  auto X = complete_complex(4, 2);
  FaceSigning f = random_signing(4, 53);
  auto Y = local_lift(X, f);
  LiftLawReport rep = verify_lift_laws(X, f, Y, {"spectrum-union"});
  REQUIRE(rep.laws.size() == 1);
  CHECK(rep.laws[0].law == "spectrum-union");
  CHECK(rep.pass);
}

TEST_CASE("lower-link invariance on a 3-complex") {
  auto X = complete_complex(6, 3);
  FaceSigning f = random_signing(static_cast<int>(X.face_count(3)), 59);
  auto Y = local_lift(X, f);
  LiftLawReport rep = verify_lift_laws(X, f, Y);
  CHECK(rep.pass);
  // levels -1 and 0 agree between base and lift
  for (size_t li = 0; li < rep.base_cert.levels.size(); ++li) {
    if (rep.base_cert.levels[li].level > 0) continue;
    CHECK(rep.lift_cert.levels[li].worst_two_sided ==
          doctest::Approx(rep.base_cert.levels[li].worst_two_sided).epsilon(1e-8));
  }
}

TEST_CASE("family certification") {
  auto X0 = complete_complex(5, 2);
  std::vector<FaceSigning> signings;
  SimplicialComplex cur = X0;
  for (int j = 0; j < 3; ++j) {
    FaceSigning f = random_signing(static_cast<int>(cur.face_count(2)), 1000 + j);
    signings.push_back(f);
    cur = local_lift(cur, f);
  }
  FamilyReport rep = certify_family(X0, signings);
  CHECK(rep.pass);
  CHECK(rep.vertex_counts == std::vector<int>{5, 10, 20, 40});
  CHECK(rep.top_degrees == std::vector<std::int64_t>{3, 3, 3, 3});
  CHECK(rep.top_degree_invariant);

  FamilyReport base_only = certify_family(X0, {});
  CHECK(base_only.stages.empty());
  CHECK(base_only.vertex_counts == std::vector<int>{5});

  CHECK_THROWS_AS(certify_family(X0, {FaceSigning::constant(3, 1)}), DomainError);
}

TEST_CASE("iterated face counts follow the exponential law") {
  auto X0 = complete_complex(5, 2);
  SimplicialComplex cur = X0;
  for (int i = 1; i <= 3; ++i) {
    FaceSigning f = random_signing(static_cast<int>(cur.face_count(2)), 2000 + i);
    cur = local_lift(cur, f);
    for (int j = 0; j <= 0; ++j)  // j <= k-2
      CHECK(cur.face_count(j) == (std::int64_t{1} << ((j + 1) * i)) * X0.face_count(j));
  }
}

TEST_CASE("certificate worst case agrees with the direct expansion scan") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {5, 3}, {7, 2}}) {
    auto X = complete_complex(n, k);
    CHECK(certify_hdx(X).global_two_sided == doctest::Approx(hdx_lambda(X)).epsilon(1e-12));
  }
}

TEST_CASE("certification is deterministic across worker counts") {
  auto X = complete_complex(6, 3);
  setenv("HDX_THREADS", "1", 1);
  HdxCertificate one = certify_hdx(X);
  setenv("HDX_THREADS", "4", 1);
  HdxCertificate four = certify_hdx(X);
  unsetenv("HDX_THREADS");
  REQUIRE(one.levels.size() == four.levels.size());
  for (size_t i = 0; i < one.levels.size(); ++i) {
    CHECK(one.levels[i].worst_two_sided == four.levels[i].worst_two_sided);
    CHECK(one.levels[i].worst_one_sided == four.levels[i].worst_one_sided);
    CHECK(one.levels[i].argmax_face == four.levels[i].argmax_face);
  }
  CHECK(one.global_two_sided == four.global_two_sided);
  CHECK(one.link_diameter_min == four.link_diameter_min);
}

TEST_CASE("diameter statistics") {
  DiameterStats st = link_diameter_stats(complete_complex(6, 2));
  CHECK(st.links == 6);
  CHECK(st.min == 1);
  CHECK(st.max == 1);
  CHECK(st.mean == doctest::Approx(1.0));
  CHECK(st.lower_bound == doctest::Approx(std::log2(5.0) / std::log2(4.0)));

  auto C5 = SimplicialComplex::from_top_faces(1, [] {
    std::vector<Face> fs;
    for (int i = 0; i < 5; ++i) fs.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    return fs;
  }());
  DiameterStats c5 = link_diameter_stats(C5);
  CHECK(c5.links == 1);
  CHECK(c5.min == 2);
  CHECK(c5.max == 2);
}

TEST_CASE("iterated lifts keep the top degree and grow link diameters") {
  auto X = complete_complex(6, 2);
  SimplicialComplex cur = X;
  int prev_min = 0;
  for (int stage = 1; stage <= 3; ++stage) {
    FaceSigning f = random_signing(static_cast<int>(cur.face_count(2)), 9100 + stage);
    cur = local_lift(cur, f);
    auto p = cur.regularity_profile();
    REQUIRE(p.regular);
    CHECK(p.degrees[1] == 4);  // d_{k-1} never moves
    DiameterStats ds = link_diameter_stats(cur);
    CHECK(ds.disconnected == 0);
    // volume bound: a d1-regular graph on d0 vertices has diameter at least
    // log(d0)/log(d1); the reported bound tracks the growing link size
    CHECK(static_cast<double>(ds.min) >= ds.lower_bound - 1.0);
    CHECK(ds.min >= prev_min);
    prev_min = ds.min;
  }
}

TEST_CASE("audit of lifted links") {
  auto X = complete_complex(6, 2);
  FaceSigning f = random_signing(static_cast<int>(X.face_count(2)), 61);
  auto Y = local_lift(X, f);
  LiftLinkAudit ok = audit_lift_links(X, Y, 1.0, 1.0, 3);
  CHECK(ok.pass);
  CHECK(ok.links == 12);
  CHECK(ok.worst_signed_norm > 0.0);
  LiftLinkAudit bad = audit_lift_links(X, Y, 0.0, 1.0, 3);
  CHECK(!bad.pass);
  CHECK(!bad.failures.empty());

  // at k = 1 the single audited link is the whole lifted graph
  auto C6 = SimplicialComplex::from_top_faces(1, [] {
    std::vector<Face> fs;
    for (int i = 0; i < 6; ++i) fs.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
    return fs;
  }());
  FaceSigning g = random_signing(6, 62);
  auto L = local_lift(C6, g);
  LiftLinkAudit k1 = audit_lift_links(C6, L, 1.0, 1.0, 3);
  CHECK(k1.pass);
  CHECK(k1.links == 1);
}
