#include "hdx/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "hdx/parallel.hpp"

namespace hdx {

namespace {

struct LinkMeasurement {
  double two_sided = 0.0;
  double one_sided = 0.0;
  bool connected = true;
  bool regular = true;
  int diameter = -1;
};

LinkMeasurement measure_link(const SimplicialComplex& link_complex, bool with_diameter) {
  Graph skel = skeleton_graph(link_complex);
  SkeletonSpectrum ss = skeleton_spectrum(skel);
  LinkMeasurement m;
  m.two_sided = ss.report.two_sided;
  m.one_sided = ss.report.one_sided;
  m.connected = ss.connected;
  m.regular = ss.regular;
  if (with_diameter) m.diameter = skel.diameter();
  return m;
}

bool law_selected(const std::set<std::string>& laws, const std::string& name) {
  return laws.empty() || laws.count(name) > 0;
}

std::vector<double> sorted_union_spectrum(const SpectrumReport& a, const SpectrumReport& b) {
  std::vector<double> u = a.eigenvalues;
  u.insert(u.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  return u;
}

}  // namespace

HdxCertificate certify_hdx(const SimplicialComplex& X) {
  const int k = X.dimension();
  HdxCertificate cert;
  cert.dimension = k;
  cert.vertex_count = X.vertex_count();
  for (int l = 0; l <= k; ++l) cert.face_counts.push_back(X.face_count(l));
  cert.profile = X.regularity_profile();

  // level -1: the complex's own skeleton
  {
    LevelSummary s;
    s.level = -1;
    s.links = 1;
    LinkMeasurement m = measure_link(X, /*with_diameter=*/k == 1);
    s.worst_two_sided = m.two_sided;
    s.worst_one_sided = m.one_sided;
    s.disconnected = m.connected ? 0 : 1;
    s.irregular = m.regular ? 0 : 1;
    if (k == 1) cert.link_diameter_min = m.diameter;
    cert.levels.push_back(s);
  }

  for (int l = 0; l <= k - 2; ++l) {
    const auto& faces = X.faces(l);
    std::vector<LinkMeasurement> results(faces.size());
    const bool with_diam = (l == k - 2);
    parallel_for_index(faces.size(), [&](std::size_t i) {
      results[i] = measure_link(X.link(faces[i]).complex(), with_diam);
    });
    LevelSummary s;
    s.level = l;
    s.links = static_cast<int>(faces.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& m = results[i];
      if (s.argmax_face.empty() || m.two_sided > s.worst_two_sided) {
        s.argmax_face = faces[i];
        s.worst_two_sided = m.two_sided;
      }
      s.worst_one_sided = std::max(s.worst_one_sided, m.one_sided);
      if (!m.connected) ++s.disconnected;
      if (!m.regular) ++s.irregular;
      // minimum over finite diameters; -1 when every link is disconnected
      if (with_diam && m.diameter >= 0 &&
          (cert.link_diameter_min < 0 || m.diameter < cert.link_diameter_min))
        cert.link_diameter_min = m.diameter;
    }
    cert.levels.push_back(s);
  }

  for (const auto& s : cert.levels) {
    cert.global_two_sided = std::max(cert.global_two_sided, s.worst_two_sided);
    cert.global_one_sided = std::max(cert.global_one_sided, s.worst_one_sided);
  }
  return cert;
}

LiftLawReport verify_lift_laws(const SimplicialComplex& X, const FaceSigning& f,
                               const SimplicialComplex& X_hat,
                               const std::set<std::string>& laws) {
  const int k = X.dimension();
  LiftLawReport rep;
  rep.base_cert = certify_hdx(X);
  rep.lift_cert = certify_hdx(X_hat);

  if (law_selected(laws, "regularity")) {
    LawResult law;
    law.law = "regularity";
    law.pass = true;
    const auto& bp = rep.base_cert.profile;
    const auto& lp = rep.lift_cert.profile;
    if (!bp.regular) {
      law.pass = false;
      law.detail = "base complex is irregular";
    } else if (!lp.regular) {
      law.pass = false;
      law.detail = "lift is irregular: face " + face_key(lp.offending_face) + " has degree " +
                   std::to_string(lp.degree_seen) + " vs " + std::to_string(lp.degree_expected);
    } else {
      for (int l = 0; l < k; ++l) {
        const std::int64_t want = (l <= k - 2) ? 2 * bp.degrees[l] : bp.degrees[l];
        ++law.checked;
        if (lp.degrees[l] != want) {
          law.pass = false;
          law.detail = "degree at level " + std::to_string(l) + " is " +
                       std::to_string(lp.degrees[l]) + ", expected " + std::to_string(want);
          break;
        }
      }
    }
    rep.laws.push_back(std::move(law));
  }

  if (law_selected(laws, "face-counts")) {
    LawResult law;
    law.law = "face-counts";
    law.pass = true;
    for (int l = 0; l <= k; ++l) {
      const std::int64_t factor = (l <= k - 1) ? (std::int64_t{1} << (l + 1))
                                               : (std::int64_t{1} << k);
      const std::int64_t want = factor * X.face_count(l);
      ++law.checked;
      if (X_hat.face_count(l) != want) {
        law.pass = false;
        law.detail = "|lift(" + std::to_string(l) + ")| = " +
                     std::to_string(X_hat.face_count(l)) + ", expected " + std::to_string(want);
        break;
      }
    }
    rep.laws.push_back(std::move(law));
  }

  if (law_selected(laws, "link-structure")) {
    LawResult law;
    law.law = "link-structure";
    law.pass = true;
    try {
      check_link_structure(X, f, X_hat, Face{});
      ++law.checked;
      for (int l = 0; l <= k - 2 && law.pass; ++l) {
        for (const Face& sigma_hat : X_hat.faces(l)) {
          check_link_structure(X, f, X_hat, sigma_hat);
          ++law.checked;
        }
      }
    } catch (const HdxError& e) {
      law.pass = false;
      law.detail = e.what();
    }
    rep.laws.push_back(std::move(law));
  }

  if (law_selected(laws, "spectrum-union")) {
    LawResult law;
    law.law = "spectrum-union";
    law.pass = true;
    const auto& codim2 = (k >= 2) ? X_hat.faces(k - 2) : std::vector<Face>{Face{}};
    for (const Face& sigma_hat : codim2) {
      LinkView lift_link = X_hat.link(sigma_hat);
      SpectrumReport lift_spec =
          skeleton_spectrum(skeleton_graph(lift_link.complex())).report;
      InducedLink il = induced_edge_signing(X, f, sigma_hat);
      SpectrumReport base_spec = skeleton_spectrum(il.skel).report;
      SpectrumReport signed_spec = spectrum(SignedWalkOperator::make(il.skel, il.signing));
      std::vector<double> expect = sorted_union_spectrum(base_spec, signed_spec);

      ++law.checked;
      if (expect.size() != lift_spec.eigenvalues.size()) {
        law.pass = false;
        law.detail = "link of " + face_key(sigma_hat) + ": eigenvalue count mismatch";
        break;
      }
      double maxdiff = 0.0;
      for (size_t i = 0; i < expect.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(expect[i] - lift_spec.eigenvalues[i]));
      if (maxdiff > kSpectralTol) {
        law.pass = false;
        law.detail = "link of " + face_key(sigma_hat) + ": union spectrum deviates by " +
                     std::to_string(maxdiff);
        break;
      }
      // cross-check: the lift link's two-sided lambda equals the union with
      // exactly one trivial eigenvalue (the base link's top one) removed
      std::vector<double> rest = expect;
      auto it = std::find_if(rest.begin(), rest.end(), [&](double x) {
        return std::abs(x - base_spec.top()) <= kSpectralTol;
      });
      if (it != rest.end()) rest.erase(it);
      double lambda_from_union = 0.0;
      for (double x : rest) lambda_from_union = std::max(lambda_from_union, std::abs(x));
      if (std::abs(lambda_from_union - lift_spec.two_sided) > kSpectralTol) {
        law.pass = false;
        law.detail = "link of " + face_key(sigma_hat) + ": two-sided " +
                     std::to_string(lift_spec.two_sided) + " vs union-derived " +
                     std::to_string(lambda_from_union);
        break;
      }
    }
    rep.laws.push_back(std::move(law));
  }

  if (law_selected(laws, "lower-links")) {
    LawResult law;
    law.law = "lower-links";
    law.pass = true;
    // level -1 and every level below k-2: lambda is preserved exactly
    for (int li = 0; li < static_cast<int>(rep.lift_cert.levels.size()) && law.pass; ++li) {
      const auto& ls = rep.lift_cert.levels[li];
      if (ls.level > k - 3) continue;
      const auto& bs = rep.base_cert.levels[li];
      ++law.checked;
      if (std::abs(ls.worst_two_sided - bs.worst_two_sided) > kSpectralTol) {
        law.pass = false;
        law.detail = "level " + std::to_string(ls.level) + ": lift worst lambda " +
                     std::to_string(ls.worst_two_sided) + " vs base " +
                     std::to_string(bs.worst_two_sided);
      }
    }
    rep.laws.push_back(std::move(law));
  }

  rep.pass = std::all_of(rep.laws.begin(), rep.laws.end(),
                         [](const LawResult& l) { return l.pass; });
  return rep;
}

FamilyReport certify_family(const SimplicialComplex& X0,
                            const std::vector<FaceSigning>& signings) {
  FamilyReport rep;
  rep.vertex_counts.push_back(X0.vertex_count());
  const int k = X0.dimension();
  RegularityProfile p0 = X0.regularity_profile();
  rep.top_degrees.push_back(p0.regular ? p0.degrees[k - 1] : -1);

  SimplicialComplex current = X0;
  for (const FaceSigning& f : signings) {
    if (f.size() != static_cast<int>(current.faces(k).size()))
      throw DomainError("stage signing does not match the current complex's top faces");
    SimplicialComplex next = local_lift(current, f);
    rep.stages.push_back(verify_lift_laws(current, f, next));
    rep.vertex_counts.push_back(next.vertex_count());
    RegularityProfile p = next.regularity_profile();
    rep.top_degrees.push_back(p.regular ? p.degrees[k - 1] : -1);
    current = std::move(next);
  }

  rep.top_degree_invariant =
      std::all_of(rep.top_degrees.begin(), rep.top_degrees.end(),
                  [&](std::int64_t d) { return d == rep.top_degrees.front() && d >= 0; });
  rep.pass = rep.top_degree_invariant &&
             std::all_of(rep.stages.begin(), rep.stages.end(),
                         [](const LiftLawReport& r) { return r.pass; });
  return rep;
}

LiftLinkAudit audit_lift_links(const SimplicialComplex& X, const SimplicialComplex& X_hat,
                               double lambda_target, double beta, int t) {
  const int k = X.dimension();
  const std::vector<Face> codim2 = X_hat.codim2_faces();
  LiftLinkAudit audit;
  audit.links = static_cast<int>(codim2.size());

  struct PerLink {
    double signed_norm = 0.0;
    std::string failure;
  };
  std::vector<PerLink> results(codim2.size());

  parallel_for_index(codim2.size(), [&](std::size_t i) {
    const Face& sigma_hat = codim2[i];
    PerLink& out = results[i];
    Graph lift_skel = skeleton_graph(X_hat.link(sigma_hat).complex());
    const Face sigma = (k >= 2) ? project_face(sigma_hat) : Face{};
    Graph base_skel = skeleton_graph(X.link(sigma).complex());

    std::vector<double> lift_spec = skeleton_spectrum(lift_skel).report.eigenvalues;
    std::vector<double> base_spec = skeleton_spectrum(base_skel).report.eigenvalues;

    // multiset subtraction: the new eigenvalues introduced by the lift
    std::sort(lift_spec.begin(), lift_spec.end());
    std::sort(base_spec.begin(), base_spec.end());
    std::vector<double> fresh;
    size_t bi = 0;
    for (double x : lift_spec) {
      if (bi < base_spec.size() && std::abs(x - base_spec[bi]) <= kSpectralTol)
        ++bi;
      else
        fresh.push_back(x);
    }
    if (bi != base_spec.size()) {
      out.failure = "spectrum of the lifted link does not contain the base link's";
      return;
    }
    for (double x : fresh) out.signed_norm = std::max(out.signed_norm, std::abs(x));
    if (out.signed_norm > lambda_target + kSpectralTol) {
      out.failure = "new-eigenvalue norm " + std::to_string(out.signed_norm) +
                    " exceeds target " + std::to_string(lambda_target);
      return;
    }
    if (auto w = is_sparse(lift_skel, beta, t)) {
      out.failure = "sparseness witness S=" + face_key(w->S) + " T=" + face_key(w->T) +
                    " value " + std::to_string(w->value) + " > " + std::to_string(w->bound);
      return;
    }
  });

  for (std::size_t i = 0; i < results.size(); ++i) {
    audit.worst_signed_norm = std::max(audit.worst_signed_norm, results[i].signed_norm);
    if (!results[i].failure.empty())
      audit.failures.push_back({codim2[i], results[i].failure});
  }
  audit.pass = audit.failures.empty();
  return audit;
}

DiameterStats link_diameter_stats(const SimplicialComplex& X) {
  DiameterStats st;
  std::vector<Face> sigmas = X.codim2_faces();
  st.links = static_cast<int>(sigmas.size());
  std::vector<int> diams(sigmas.size());
  parallel_for_index(sigmas.size(), [&](std::size_t i) {
    diams[i] = skeleton_graph(X.link(sigmas[i]).complex()).diameter();
  });
  long long sum = 0;
  int finite = 0;
  for (int d : diams) {
    if (d < 0) {
      ++st.disconnected;
      continue;
    }
    if (st.min < 0 || d < st.min) st.min = d;
    if (d > st.max) st.max = d;
    sum += d;
    ++finite;
  }
  if (finite > 0) st.mean = static_cast<double>(sum) / finite;

  RegularityProfile p = X.regularity_profile();
  if (p.regular) {
    const int k = X.dimension();
    const double d_km2 =
        (k >= 2) ? static_cast<double>(p.degrees[k - 2]) : X.vertex_count();
    const double d_km1 = static_cast<double>(p.degrees[k - 1]);
    if (d_km1 >= 2.0) st.lower_bound = std::log2(d_km2) / std::log2(d_km1);
  }
  return st;
}

}  // namespace hdx
