#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "hdx/io.hpp"
#include "hdx/pipeline.hpp"

using namespace hdx;

namespace {

struct GlobalOpts {
  std::string format = "text";
  int threads = 0;
};

void apply_threads(const GlobalOpts& g) {
  if (g.threads > 0) setenv("HDX_THREADS", std::to_string(g.threads).c_str(), 1);
}

struct LoadedComplex {
  SimplicialComplex complex;
  std::string bytes;  // exact file content, for lineage hashing
  std::string hash;
};

LoadedComplex load_complex(const std::string& path) {
  const std::string bytes = read_text_file(path);
  return {complex_from_json(json::parse(bytes)), bytes, content_hash(bytes)};
}

void print_certificate_summary(std::ostream& os, const HdxCertificate& c) {
  os << "complex: dimension " << c.dimension << ", " << c.vertex_count << " vertices\n";
  os << "faces per level:";
  for (auto n : c.face_counts) os << " " << n;
  os << "\n";
  if (c.profile.regular) {
    os << "regular with profile (";
    for (size_t i = 0; i < c.profile.degrees.size(); ++i)
      os << (i ? "," : "") << c.profile.degrees[i];
    os << ")\n";
  } else {
    os << "irregular at face " << face_key(c.profile.offending_face) << " (degree "
       << c.profile.degree_seen << " vs " << c.profile.degree_expected << ")\n";
  }
  for (const auto& lvl : c.levels) {
    os << "  level " << lvl.level << ": " << lvl.links << " links, worst two-sided "
       << lvl.worst_two_sided << ", worst one-sided " << lvl.worst_one_sided;
    if (lvl.disconnected) os << ", " << lvl.disconnected << " disconnected";
    os << "\n";
  }
  os << "global two-sided lambda: " << c.global_two_sided << "\n";
  if (c.link_diameter_min >= 0)
    os << "minimum link diameter: " << c.link_diameter_min << "\n";
}

json lineage_block(const LoadedComplex& base, const std::string& signing_hash) {
  json l{{"base", base.hash}};
  if (!signing_hash.empty()) l["signing"] = signing_hash;
  return l;
}

// Writes signing/complex/report artifacts for one lift and prints a summary.
int emit_lift(const GlobalOpts& g, const std::string& command, const LoadedComplex& base,
              const FaceSigning& f, const json& config, const std::string& prefix,
              const std::optional<json>& stats,
              const std::optional<ResolvedLLLConfig>& audit_cfg = std::nullopt) {
  SimplicialComplex lifted = local_lift(base.complex, f);

  json jf = signing_to_json(base.complex, f);
  jf["meta"] = make_meta(command, config);
  jf["lineage"] = lineage_block(base, "");
  const std::string signing_bytes = canonical_dump(jf);
  write_text_file(prefix + ".signing.json", signing_bytes);
  const std::string signing_hash = content_hash(signing_bytes);

  json jc = complex_to_json(lifted);
  jc["meta"] = make_meta(command, config);
  jc["lineage"] = lineage_block(base, signing_hash);
  write_json_file(prefix + ".complex.json", jc);

  LiftLawReport rep = verify_lift_laws(base.complex, f, lifted);
  json jr = lift_report_to_json(rep);
  jr["meta"] = make_meta(command, config);
  jr["lineage"] = lineage_block(base, signing_hash);
  if (stats) jr["stats"] = *stats;
  bool pass = rep.pass;
  if (audit_cfg) {
    // independent confirmation of the resampling engine's output guarantee
    LiftLinkAudit audit = audit_lift_links(base.complex, lifted, audit_cfg->lambda_prime_target,
                                           audit_cfg->beta, audit_cfg->sparsity_t);
    jr["audit"] = audit_to_json(audit);
    pass = pass && audit.pass;
  }
  write_json_file(prefix + ".report.json", jr);

  if (g.format == "json") {
    std::cout << canonical_dump(jr);
  } else {
    std::cout << command << ": wrote " << prefix << ".{signing,complex,report}.json\n";
    print_certificate_summary(std::cout, rep.lift_cert);
    std::cout << "lift laws: " << (pass ? "pass" : "FAIL") << "\n";
    for (const auto& law : rep.laws)
      if (!law.pass) std::cout << "  " << law.law << ": " << law.detail << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local lifts of simplicial complexes: generators, lifters, verifier"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "worker threads (default: HDX_THREADS or all cores)");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate or canonicalize a complex");
  std::string gen_kind = "complete", gen_in, gen_out = "complex.json";
  int gen_n = 0, gen_k = 2;
  gen->add_option("kind", gen_kind, "complete | file")->check(CLI::IsMember({"complete", "file"}));
  gen->add_option("--n", gen_n, "vertices (complete)");
  gen->add_option("--k", gen_k, "dimension (complete)");
  gen->add_option("--in", gen_in, "input complex (file)");
  gen->add_option("-o,--out", gen_out, "output path");

  // --- lift-random ---
  auto* lr = app.add_subcommand("lift-random", "lift under a uniform random signing");
  std::string lr_in, lr_prefix = "lift";
  std::uint64_t lr_seed = 0;
  lr->add_option("--in", lr_in, "base complex")->required();
  lr->add_option("--seed", lr_seed, "rng seed (required: runs must be replayable)")->required();
  lr->add_option("--out-prefix", lr_prefix, "artifact prefix");

  // --- lift-mt ---
  auto* mt = app.add_subcommand("lift-mt", "Moser-Tardos resampling lift");
  std::string mt_in, mt_prefix = "lift";
  LLLConfig mt_cfg;
  double mt_lambda = -1.0;
  int mt_t = -1;
  std::int64_t mt_cap = -1;
  mt->add_option("--in", mt_in, "base complex")->required();
  mt->add_option("--beta", mt_cfg.beta, "sparseness parameter")->required();
  mt->add_option("--lambda-target", mt_lambda, "spectral-norm threshold for signed links");
  mt->add_option("--t", mt_t, "sparseness window (default floor(log2 2 d_{k-2}))");
  mt->add_option("--seed", mt_cfg.rng_seed, "rng seed")->required();
  mt->add_option("--max-resamples", mt_cap, "resample cap (default 100 |X(k-2)|)");
  mt->add_flag("--override-nice", mt_cfg.override_nice,
               "run without the niceness termination guarantee");
  mt->add_option("--out-prefix", mt_prefix, "artifact prefix");

  // --- lift-derand ---
  auto* dr = app.add_subcommand("lift-derand", "conditional-probabilities greedy lift");
  std::string dr_in, dr_prefix = "lift";
  DerandParams dr_params;
  int dr_r = -1;
  double dr_gamma = -1.0;
  dr->add_option("--in", dr_in, "base complex")->required();
  dr->add_option("--beta", dr_params.beta, "sparseness parameter")->required();
  dr->add_option("--r", dr_r, "even walk length (default 2 ceil(log2 d_{k-2}))");
  dr->add_option("--c2", dr_params.c2, "constant inside the gamma penalty weight");
  dr->add_option("--gamma", dr_gamma, "penalty weight override");
  dr->add_flag("--override-hypotheses", dr_params.override_hypotheses,
               "skip the degree hypotheses");
  dr->add_option("--out-prefix", dr_prefix, "artifact prefix");

  // --- verify ---
  auto* vf = app.add_subcommand("verify", "validate a complex or check lift laws");
  std::string vf_in, vf_base, vf_signing, vf_lift, vf_laws, vf_out, vf_family;
  int vf_stages = 0;
  vf->add_option("--in", vf_in, "single complex: validate and certify");
  vf->add_option("--base", vf_base, "base complex (lift-law mode)");
  vf->add_option("--signing", vf_signing, "signing file (lift-law mode)");
  vf->add_option("--lift", vf_lift, "lifted complex (lift-law mode)");
  vf->add_option("--laws", vf_laws, "comma-separated law subset");
  vf->add_option("--family-dir", vf_family, "re-hash a family directory's lineage chain");
  vf->add_option("--stages", vf_stages, "stage count for --family-dir");
  vf->add_option("-o,--out", vf_out, "write the report here");

  // --- family ---
  auto* fam = app.add_subcommand("family", "iterate lifts into a family of complexes");
  std::string fam_in, fam_mode = "random", fam_dir = "family";
  int fam_stages = 1;
  StageParams fam_params;
  double fam_lambda = -1.0;
  int fam_t = -1, fam_r = -1;
  bool fam_override_hyp = false;
  fam->add_option("--in", fam_in, "base complex")->required();
  fam->add_option("--stages", fam_stages, "number of lifts")->required();
  fam->add_option("--mode", fam_mode, "random | mt | derand")
      ->check(CLI::IsMember({"random", "mt", "derand"}));
  fam->add_option("--seed", fam_params.seed, "master seed")->required();
  fam->add_option("--out-dir", fam_dir, "artifact directory");
  fam->add_option("--beta", fam_params.lll.beta, "beta for mt/derand stages");
  fam->add_option("--lambda-target", fam_lambda, "mt spectral threshold");
  fam->add_option("--t", fam_t, "mt sparseness window");
  fam->add_flag("--override-nice", fam_params.lll.override_nice, "mt niceness override");
  fam->add_option("--r", fam_r, "derand walk length");
  fam->add_option("--c2", fam_params.derand.c2, "derand gamma constant");
  fam->add_flag("--override-hypotheses", fam_override_hyp, "derand hypothesis override");

  // --- stats ---
  auto* st = app.add_subcommand("stats", "certificate and link-diameter statistics");
  std::string st_in;
  st->add_option("--in", st_in, "complex")->required();

  CLI11_PARSE(app, argc, argv);
  apply_threads(g);

  try {
    if (gen->parsed()) {
      SimplicialComplex X = [&] {
        if (gen_kind == "complete") {
          if (gen_n <= 0) throw ParameterError("gen complete needs --n");
          return complete_complex(gen_n, gen_k);
        }
        if (gen_in.empty()) throw ParameterError("gen file needs --in");
        return load_complex(gen_in).complex;
      }();
      json j = complex_to_json(X);
      j["meta"] = make_meta("gen " + gen_kind,
                            json{{"n", X.vertex_count()}, {"k", X.dimension()}});
      write_json_file(gen_out, j);
      HdxCertificate cert = certify_hdx(X);
      if (g.format == "json") {
        std::cout << canonical_dump(certificate_to_json(cert));
      } else {
        std::cout << "wrote " << gen_out << "\n";
        print_certificate_summary(std::cout, cert);
      }
      return 0;
    }

    if (lr->parsed()) {
      LoadedComplex base = load_complex(lr_in);
      const int top = static_cast<int>(base.complex.faces(base.complex.dimension()).size());
      FaceSigning f = random_signing(top, lr_seed);
      return emit_lift(g, "lift-random", base, f, json{{"seed", lr_seed}}, lr_prefix,
                       std::nullopt);
    }

    if (mt->parsed()) {
      LoadedComplex base = load_complex(mt_in);
      if (mt_lambda >= 0) mt_cfg.lambda_prime_target = mt_lambda;
      if (mt_t >= 0) mt_cfg.sparsity_t = mt_t;
      if (mt_cap >= 0) mt_cfg.max_resamples = mt_cap;
      MTResult res = moser_tardos_lift(base.complex, mt_cfg);
      json stats = lift_stats_to_json(res.stats);
      if (g.format == "text")
        std::cout << "moser-tardos: " << res.stats.total_resamples << " resamples over "
                  << res.stats.iterations << " scans, " << res.stats.eigensolves
                  << " eigensolves, " << res.stats.wall_seconds << "s\n";
      json config{{"beta", res.stats.config.beta},
                  {"lambda_prime_target", res.stats.config.lambda_prime_target},
                  {"t", res.stats.config.sparsity_t},
                  {"seed", res.stats.config.rng_seed},
                  {"max_resamples", res.stats.config.max_resamples},
                  {"override_nice", mt_cfg.override_nice}};
      write_json_file(mt_prefix + ".stats.json", stats);
      return emit_lift(g, "lift-mt", base, res.signing, config, mt_prefix, stats,
                       res.stats.config);
    }

    if (dr->parsed()) {
      LoadedComplex base = load_complex(dr_in);
      if (dr_r > 0) dr_params.r = dr_r;
      if (dr_gamma > 0) dr_params.gamma = dr_gamma;
      DerandResult res = greedy_derand_lift(base.complex, dr_params);
      if (g.format == "text") {
        const auto& top = base.complex.faces(base.complex.dimension());
        for (size_t i = 0; i < top.size(); ++i)
          std::cout << "assign " << face_key(top[i]) << " -> "
                    << (res.signing.value(static_cast<int>(i)) > 0 ? "+1" : "-1")
                    << "  E[Q] = " << res.potential_trace[i + 1].get_d() << "\n";
        if (res.params.r_is_default)
          std::cout << "walk length r = " << res.params.r << " (paper default)\n";
        else
          std::cout << "walk length r = " << res.params.r
                    << " (OVERRIDE: below the 2 ceil(log2 m) default; the extracted "
                       "norm bound weakens accordingly)\n";
      }
      json stats = derand_result_to_json(res);
      json config{{"beta", dr_params.beta},
                  {"c2", dr_params.c2},
                  {"r", res.params.r},
                  {"override_hypotheses", dr_params.override_hypotheses}};
      write_json_file(dr_prefix + ".stats.json", stats);
      return emit_lift(g, "lift-derand", base, res.signing, config, dr_prefix, stats);
    }

    if (vf->parsed()) {
      if (!vf_family.empty()) {
        if (vf_stages < 1) throw ParameterError("--family-dir needs --stages");
        std::string why;
        const bool ok = verify_family_lineage(vf_family, vf_stages, &why);
        if (g.format == "json")
          std::cout << canonical_dump(json{{"pass", ok}, {"detail", why}});
        else
          std::cout << (ok ? "lineage chain verifies" : "lineage BROKEN: " + why) << "\n";
        return ok ? 0 : 1;
      }
      if (!vf_in.empty()) {
        LoadedComplex in = load_complex(vf_in);
        HdxCertificate cert = certify_hdx(in.complex);
        json jc = certificate_to_json(cert);
        if (!vf_out.empty()) write_json_file(vf_out, jc);
        if (g.format == "json")
          std::cout << canonical_dump(jc);
        else
          print_certificate_summary(std::cout, cert);
        return 0;
      }
      if (vf_base.empty() || vf_signing.empty() || vf_lift.empty())
        throw ParameterError("verify needs --in, or all of --base/--signing/--lift");
      LoadedComplex base = load_complex(vf_base);
      LoadedComplex lifted = load_complex(vf_lift);
      FaceSigning f = signing_from_json(base.complex, json::parse(read_text_file(vf_signing)));
      std::set<std::string> laws;
      if (!vf_laws.empty()) {
        std::stringstream ss(vf_laws);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto& known = all_lift_laws();
          if (std::find(known.begin(), known.end(), item) == known.end())
            throw ParameterError("unknown law '" + item + "'");
          laws.insert(item);
        }
      }
      LiftLawReport rep = verify_lift_laws(base.complex, f, lifted.complex, laws);
      json jr = lift_report_to_json(rep);
      if (!vf_out.empty()) write_json_file(vf_out, jr);
      if (g.format == "json") {
        std::cout << canonical_dump(jr);
      } else {
        for (const auto& law : rep.laws)
          std::cout << (law.pass ? "pass" : "FAIL") << "  " << law.law << " (" << law.checked
                    << " checks)" << (law.detail.empty() ? "" : ": " + law.detail) << "\n";
        std::cout << (rep.pass ? "all laws pass" : "lift laws FAILED") << "\n";
      }
      return rep.pass ? 0 : 1;
    }

    if (fam->parsed()) {
      LoadedComplex base = load_complex(fam_in);
      if (fam_lambda >= 0) fam_params.lll.lambda_prime_target = fam_lambda;
      if (fam_t >= 0) fam_params.lll.sparsity_t = fam_t;
      if (fam_r > 0) fam_params.derand.r = fam_r;
      fam_params.derand.beta = fam_params.lll.beta;
      fam_params.derand.override_hypotheses = fam_override_hyp;
      LiftMode mode = fam_mode == "random" ? LiftMode::random
                      : fam_mode == "mt"   ? LiftMode::mt
                                           : LiftMode::derand;
      FamilyRunResult run = run_family(base.complex, fam_stages, mode, fam_params, fam_dir);
      if (g.format == "json") {
        std::cout << canonical_dump(family_report_to_json(run.report));
      } else {
        std::cout << "family of " << run.stages.size() << " stages in " << fam_dir << "\n";
        std::cout << "vertex counts:";
        for (int n : run.report.vertex_counts) std::cout << " " << n;
        std::cout << "\ntop-face degrees:";
        for (auto d : run.report.top_degrees) std::cout << " " << d;
        std::cout << "\nfamily report: " << (run.report.pass ? "pass" : "FAIL") << "\n";
      }
      return run.report.pass ? 0 : 1;
    }

    if (st->parsed()) {
      LoadedComplex in = load_complex(st_in);
      HdxCertificate cert = certify_hdx(in.complex);
      DiameterStats ds = link_diameter_stats(in.complex);
      // alpha_k(d_{k-1}): the deviation scale the signing machinery targets;
      // above 1 every sparseness threshold is vacuous at this degree
      std::optional<double> alpha;
      if (cert.profile.regular && cert.profile.degrees.back() >= 2)
        alpha = alpha_threshold(in.complex.dimension(),
                                static_cast<double>(cert.profile.degrees.back()));
      if (g.format == "json") {
        json j{{"certificate", certificate_to_json(cert)},
               {"diameters", diameter_stats_to_json(ds)}};
        j["alpha_threshold"] = alpha ? json(*alpha) : json(nullptr);
        try {
          j["niceness"] = niceness_to_json(is_nice(in.complex));
        } catch (const RegularityError&) {
          j["niceness"] = nullptr;
        }
        std::cout << canonical_dump(j);
      } else {
        print_certificate_summary(std::cout, cert);
        std::cout << "link diameters over " << ds.links << " links: min " << ds.min << ", max "
                  << ds.max << ", mean " << ds.mean << " (bound " << ds.lower_bound << ")\n";
        if (alpha) std::cout << "alpha threshold at the top degree: " << *alpha << "\n";
        try {
          NicenessReport nr = is_nice(in.complex);
          std::cout << "nice: " << (nr.nice ? "yes" : "no") << " (log2 lhs " << nr.log2_lhs
                    << ", log2 rhs " << nr.log2_rhs << ")\n";
        } catch (const RegularityError&) {
          std::cout << "nice: not applicable (irregular)\n";
        }
      }
      return 0;
    }
  } catch (const NonTerminationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const HdxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
