#include "hdx/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace hdx {

json complex_to_json(const SimplicialComplex& X) {
  json j;
  j["k"] = X.dimension();
  j["vertices"] = X.vertex_count();
  json faces = json::array();
  for (const Face& f : X.faces(X.dimension())) faces.push_back(f);
  j["top_faces"] = std::move(faces);
  if (!X.labels().empty()) j["labels"] = X.labels();
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.contains("k") || !j.contains("top_faces"))
    throw DomainError("complex file needs 'k' and 'top_faces'");
  const int k = j.at("k").get<int>();
  std::vector<Face> top = j.at("top_faces").get<std::vector<Face>>();

  // collect distinct ids to decide whether a re-map is needed
  std::vector<int> ids;
  for (const Face& f : top) ids.insert(ids.end(), f.begin(), f.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() < 0) throw DomainError("negative vertex id");

  const bool dense = !ids.empty() && ids.back() == static_cast<int>(ids.size()) - 1;
  std::optional<int> declared;
  if (j.contains("vertices")) declared = j.at("vertices").get<int>();

  if (dense) {
    SimplicialComplex X = SimplicialComplex::from_top_faces(k, std::move(top), declared);
    if (j.contains("labels")) X.set_labels(j.at("labels").get<std::vector<std::string>>());
    return X;
  }

  // re-map arbitrary ids to 0..n-1, keeping the originals as labels
  if (declared && *declared > static_cast<int>(ids.size()))
    throw PurityError("declared vertex count exceeds the vertices used by top faces");
  std::map<int, int> remap;
  for (size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<int>(i);
  for (Face& f : top)
    for (int& v : f) v = remap.at(v);
  SimplicialComplex X = SimplicialComplex::from_top_faces(k, std::move(top));
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (int id : ids) labels.push_back(std::to_string(id));
  X.set_labels(std::move(labels));
  return X;
}

json signing_to_json(const SimplicialComplex& X, const FaceSigning& f) {
  const auto& top = X.faces(X.dimension());
  if (f.size() != static_cast<int>(top.size()))
    throw DomainError("signing does not match X(k)");
  json faces = json::object();
  for (size_t i = 0; i < top.size(); ++i)
    if (f.value(static_cast<int>(i)) != 0)
      faces[face_key(top[i])] = f.value(static_cast<int>(i));
  json j;
  j["faces"] = std::move(faces);
  return j;
}

FaceSigning signing_from_json(const SimplicialComplex& X, const json& j) {
  if (!j.contains("faces") || !j.at("faces").is_object())
    throw DomainError("signing file needs a 'faces' object");
  FaceSigning f(static_cast<int>(X.faces(X.dimension()).size()));
  for (const auto& [key, val] : j.at("faces").items()) {
    Face face = parse_face_key(key);
    if (static_cast<int>(face.size()) != X.dimension() + 1 || !X.contains(face))
      throw DomainError("signing key " + key + " is not a top face of the complex");
    const int v = val.get<int>();
    if (v != 1 && v != -1) throw DomainError("signing value for " + key + " must be +-1");
    f.set(X.face_index(face), v);
  }
  return f;
}

json spectrum_to_json(const SpectrumReport& r) {
  return json{{"eigenvalues", r.eigenvalues},
              {"two_sided", r.two_sided},
              {"one_sided", r.one_sided}};
}

json witness_to_json(const SparsenessWitness& w) {
  return json{{"S", w.S}, {"T", w.T}, {"value", w.value}, {"bound", w.bound}};
}

json niceness_to_json(const NicenessReport& r) {
  return json{{"k", r.k},           {"d_km2", r.d_km2},       {"d_km1", r.d_km1},
              {"lhs", r.lhs},       {"rhs", r.rhs},           {"log2_lhs", r.log2_lhs},
              {"log2_rhs", r.log2_rhs}, {"nice", r.nice}};
}

namespace {

json profile_to_json(const RegularityProfile& p) {
  json j;
  j["regular"] = p.regular;
  if (p.regular) {
    j["degrees"] = p.degrees;
  } else {
    j["offending_face"] = face_key(p.offending_face);
    j["degree_seen"] = p.degree_seen;
    j["degree_expected"] = p.degree_expected;
  }
  return j;
}

}  // namespace

json certificate_to_json(const HdxCertificate& c) {
  json levels = json::array();
  for (const auto& s : c.levels) {
    levels.push_back(json{{"level", s.level},
                          {"links", s.links},
                          {"worst_two_sided", s.worst_two_sided},
                          {"worst_one_sided", s.worst_one_sided},
                          {"argmax_face", face_key(s.argmax_face)},
                          {"disconnected", s.disconnected},
                          {"irregular", s.irregular}});
  }
  return json{{"dimension", c.dimension},
              {"vertices", c.vertex_count},
              {"face_counts", c.face_counts},
              {"profile", profile_to_json(c.profile)},
              {"levels", std::move(levels)},
              {"global_two_sided", c.global_two_sided},
              {"global_one_sided", c.global_one_sided},
              {"link_diameter_min", c.link_diameter_min}};
}

json lift_report_to_json(const LiftLawReport& r) {
  json laws = json::array();
  for (const auto& l : r.laws)
    laws.push_back(json{{"law", l.law}, {"pass", l.pass}, {"checked", l.checked},
                        {"detail", l.detail}});
  return json{{"base", certificate_to_json(r.base_cert)},
              {"lift", certificate_to_json(r.lift_cert)},
              {"laws", std::move(laws)},
              {"pass", r.pass}};
}

json family_report_to_json(const FamilyReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages) stages.push_back(lift_report_to_json(s));
  return json{{"stages", std::move(stages)},
              {"vertex_counts", r.vertex_counts},
              {"top_degrees", r.top_degrees},
              {"top_degree_invariant", r.top_degree_invariant},
              {"pass", r.pass}};
}

json lift_stats_to_json(const LiftStats& s) {
  json per_face = json::object();
  for (const auto& [key, count] : s.resamples_per_face) per_face[key] = count;
  return json{{"config",
               json{{"beta", s.config.beta},
                    {"lambda_prime_target", s.config.lambda_prime_target},
                    {"sparsity_t", s.config.sparsity_t},
                    {"max_resamples", s.config.max_resamples},
                    {"rng_seed", s.config.rng_seed},
                    {"vacuous_beta", s.config.vacuous_beta},
                    {"vacuous_lambda", s.config.vacuous_lambda}}},
              {"iterations", s.iterations},
              {"total_resamples", s.total_resamples},
              {"eigensolves", s.eigensolves},
              {"resamples_per_face", std::move(per_face)}};
}

json derand_result_to_json(const DerandResult& r) {
  json trace = json::array();
  for (const auto& q : r.potential_trace)
    trace.push_back(json{{"value", q.get_d()}, {"exact", q.get_str()}});
  json sigmas = json::array();
  for (size_t i = 0; i < r.sigmas.size(); ++i)
    sigmas.push_back(json{{"sigma", face_key(r.sigmas[i])},
                          {"trace_term", r.final_trace_terms[i].get_d()},
                          {"penalty_term", r.final_penalty_terms[i].get_d()}});
  return json{{"params",
               json{{"beta", r.params.beta},
                    {"beta_prime", r.params.beta_prime},
                    {"c2", r.params.c2},
                    {"r", r.params.r},
                    {"r_is_default", r.params.r_is_default},
                    {"pair_size", r.params.pair_size},
                    {"gamma", r.params.gamma.get_d()}}},
              {"potential_trace", std::move(trace)},
              {"per_sigma", std::move(sigmas)}};
}

json diameter_stats_to_json(const DiameterStats& s) {
  return json{{"links", s.links},         {"min", s.min},
              {"max", s.max},             {"mean", s.mean},
              {"lower_bound", s.lower_bound}, {"disconnected", s.disconnected}};
}

json audit_to_json(const LiftLinkAudit& a) {
  json failures = json::array();
  for (const auto& f : a.failures)
    failures.push_back(json{{"sigma_hat", face_key(f.sigma_hat)}, {"reason", f.reason}});
  return json{{"links", a.links},
              {"worst_signed_norm", a.worst_signed_norm},
              {"failures", std::move(failures)},
              {"pass", a.pass}};
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HdxError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw HdxError("cannot write " + path);
  out << content;
  if (!out) throw HdxError("write to " + path + " failed");
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, canonical_dump(j));
}

json read_json_file(const std::string& path) {
  return json::parse(read_text_file(path));
}

}  // namespace hdx
