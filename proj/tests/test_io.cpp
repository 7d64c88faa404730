#include "doctest.h"
#include "hdx/io.hpp"
#include "hdx/pipeline.hpp"

#include <cstdio>
#include <filesystem>

using namespace hdx;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("hdx_test_" + tag);
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("complex json round trip") {
  auto X = complete_complex(5, 2);
  json j = complex_to_json(X);
  CHECK(j["k"] == 2);
  CHECK(j["vertices"] == 5);
  auto Y = complex_from_json(j);
  CHECK(Y.dimension() == X.dimension());
  CHECK(Y.faces(2) == X.faces(2));
  CHECK(canonical_dump(complex_to_json(Y)) == canonical_dump(j));
}

TEST_CASE("loader re-maps sparse ids and keeps labels") {
  json j;
  j["k"] = 1;
  j["top_faces"] = json::array({json::array({5, 900}), json::array({42, 900}),
                                json::array({5, 42})});
  auto X = complex_from_json(j);
  CHECK(X.vertex_count() == 3);
  CHECK(X.labels() == std::vector<std::string>{"5", "42", "900"});
  CHECK(X.faces(1) == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("loader validation errors") {
  json isolated;
  isolated["k"] = 2;
  isolated["vertices"] = 5;
  isolated["top_faces"] = json::array({json::array({0, 1, 2}), json::array({1, 2, 3})});
  CHECK_THROWS_AS(complex_from_json(isolated), PurityError);

  json exceeding;
  exceeding["k"] = 1;
  exceeding["vertices"] = 2;
  exceeding["top_faces"] = json::array({json::array({0, 1}), json::array({1, 2}),
                                        json::array({0, 2})});
  CHECK_THROWS_AS(complex_from_json(exceeding), DomainError);

  json missing;
  missing["k"] = 1;
  CHECK_THROWS_AS(complex_from_json(missing), DomainError);
}

TEST_CASE("signing json round trip") {
  auto X = complete_complex(4, 2);
  FaceSigning f(4);
  f.set(0, 1);
  f.set(2, -1);
  json j = signing_to_json(X, f);
  CHECK(j["faces"].size() == 2);
  FaceSigning g = signing_from_json(X, j);
  CHECK(g == f);

  json unknown = j;
  unknown["faces"]["0-1-9"] = 1;
  CHECK_THROWS_AS(signing_from_json(X, unknown), DomainError);
  json badval = j;
  badval["faces"]["0-1-2"] = 3;
  CHECK_THROWS_AS(signing_from_json(X, badval), DomainError);
}

TEST_CASE("spectrum and witness serialization") {
  SpectrumReport rep{{1.0, 0.0, -1.0}, 1.0, 0.0};
  json js = spectrum_to_json(rep);
  CHECK(js["eigenvalues"].size() == 3);
  CHECK(js["two_sided"] == 1.0);
  CHECK(js["one_sided"] == 0.0);

  SparsenessWitness w{{0}, {1, 2}, 0.5, 0.3};
  json jw = witness_to_json(w);
  CHECK(jw["S"] == json::array({0}));
  CHECK(jw["T"] == json::array({1, 2}));
  CHECK(jw["value"] == 0.5);
  CHECK(jw["bound"] == 0.3);
}

TEST_CASE("content hash") {
  CHECK(content_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(content_hash("a") != content_hash("b"));
  CHECK(content_hash("abc") == content_hash("abc"));
}

TEST_CASE("family run writes a verifiable lineage chain") {
  TempDir dir("family");
  auto X0 = complete_complex(5, 2);
  StageParams sp;
  sp.seed = 7;
  FamilyRunResult run = run_family(X0, 3, LiftMode::random, sp, dir.str());
  CHECK(run.report.pass);
  CHECK(run.report.vertex_counts == std::vector<int>{5, 10, 20, 40});
  CHECK(run.stages.size() == 3);

  std::string why;
  CHECK(verify_family_lineage(dir.str(), 3, &why));

  // identical seeds reproduce identical bytes
  TempDir dir2("family2");
  FamilyRunResult run2 = run_family(X0, 3, LiftMode::random, sp, dir2.str());
  for (int j = 0; j <= 3; ++j) {
    std::string name = "/stage_" + std::to_string(j) + ".complex.json";
    CHECK(read_text_file(dir.str() + name) == read_text_file(dir2.str() + name));
  }

  // tampering breaks the chain
  std::string path = dir.str() + "/stage_1.complex.json";
  std::string bytes = read_text_file(path);
  bytes.replace(bytes.find("\"k\": 2"), 6, "\"k\": 2 ");
  write_text_file(path, bytes);
  CHECK(!verify_family_lineage(dir.str(), 3, &why));
  CHECK(!why.empty());
}

TEST_CASE("report serialization is stable") {
  auto X = complete_complex(4, 2);
  FaceSigning f = random_signing(4, 3);
  auto Y = local_lift(X, f);
  LiftLawReport rep = verify_lift_laws(X, f, Y);
  json a = lift_report_to_json(rep);
  json b = lift_report_to_json(rep);
  CHECK(canonical_dump(a) == canonical_dump(b));
  CHECK(a["pass"] == true);
}
