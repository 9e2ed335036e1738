#include "wittsum/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wittsum {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& what) { fail(Err::SchemaError, what); }

long long get_ll(const json& j, const char* key, long long lo, long long hi) {
  if (!j.contains(key)) schema_fail(std::string("missing field '") + key + "'");
  if (!j[key].is_number_integer()) schema_fail(std::string("field '") + key + "' must be an integer");
  long long v = j[key].get<long long>();
  if (v < lo || v > hi)
    schema_fail(std::string("field '") + key + "' = " + std::to_string(v) + " out of range [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]");
  return v;
}

json rat_json(const Rat& r) { return json::array({rat_num(r).str(), rat_den(r).str()}); }

json chain_json(const PolygonChain& ch) {
  json out = json::array();
  for (const auto& [x, y] : ch.v) out.push_back(json::array({rat_json(x), rat_json(y)}));
  return out;
}

json cyc_json(const CyclotomicInt& v) {
  json out = json::array();
  for (const auto& c : v.c) out.push_back(c.str());
  return out;
}

json cycrat_json(const CycRat& v) {
  return json{{"num", cyc_json(v.num)}, {"den", v.den.str()}};
}

json int_vec_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

Limits limits_for(const JobSpec& job) {
  Limits lim;
  if (job.budget) lim.domain_budget = *job.budget;
  if (job.tolerance) lim.weight_tolerance = *job.tolerance;
  return lim;
}

}  // namespace

std::optional<Command> command_from_string(const std::string& s) {
  if (s == "decompose") return Command::decompose;
  if (s == "polytope") return Command::polytope;
  if (s == "nondegen") return Command::nondegen;
  if (s == "sums") return Command::sums;
  if (s == "lfunction") return Command::lfunction;
  if (s == "verify") return Command::verify;
  return std::nullopt;
}

JobSpec parse_job(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    schema_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_fail("job must be a JSON object");
  JobSpec job;
  if (j.contains("schema_version") && j["schema_version"].get<long long>() != 1)
    schema_fail("unsupported schema_version");
  job.p = get_ll(j, "p", 2, 1 << 20);
  if (!is_prime_ll(job.p)) fail(Err::PrimalityError, "p = " + std::to_string(job.p) + " is not prime");
  job.a = static_cast<int>(get_ll(j, "a", 1, 16));
  job.m = static_cast<int>(get_ll(j, "m", 1, 8));
  job.n = static_cast<int>(get_ll(j, "n", 1, 8));

  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) schema_fail("'modulus' must be an array");
    std::vector<int32_t> mod;
    for (const auto& c : j["modulus"]) {
      if (!c.is_number_integer()) schema_fail("'modulus' entries must be integers");
      mod.push_back(c.get<int32_t>());
    }
    job.modulus = std::move(mod);
  }

  if (!j.contains("witt_coords") || !j["witt_coords"].is_array())
    schema_fail("missing or invalid 'witt_coords' (array of m coordinate polynomials)");
  if (static_cast<int>(j["witt_coords"].size()) != job.m)
    schema_fail("'witt_coords' must have exactly m = " + std::to_string(job.m) + " entries");
  for (const auto& level : j["witt_coords"]) {
    if (!level.is_array()) schema_fail("each Witt coordinate must be an array of monomials");
    std::vector<std::pair<ExpVec, std::vector<int32_t>>> monos;
    std::set<ExpVec> seen;
    for (const auto& mono : level) {
      if (!mono.is_object() || !mono.contains("u") || !mono.contains("c"))
        schema_fail("each monomial must be an object with 'u' and 'c'");
      ExpVec u;
      for (const auto& e : mono["u"]) {
        if (!e.is_number_integer()) schema_fail("'u' entries must be integers");
        u.push_back(e.get<int32_t>());
      }
      if (static_cast<int>(u.size()) != job.n)
        schema_fail("exponent vector dimension differs from n");
      std::vector<int32_t> c;
      for (const auto& e : mono["c"]) {
        if (!e.is_number_integer()) schema_fail("'c' entries must be integers");
        c.push_back(e.get<int32_t>());
      }
      if (static_cast<int>(c.size()) > job.a)
        schema_fail("coefficient has more than a = " + std::to_string(job.a) + " coordinates");
      bool nonzero = false;
      for (auto& v : c) {
        v = static_cast<int32_t>(((v % job.p) + job.p) % job.p);
        if (v != 0) nonzero = true;
      }
      if (!nonzero) continue;  // zero monomials are dropped in the canonical form
      if (!seen.insert(u).second) schema_fail("duplicate exponent vector within one coordinate");
      monos.emplace_back(std::move(u), std::move(c));
    }
    std::sort(monos.begin(), monos.end());
    job.witt_coords.push_back(std::move(monos));
  }
  // standing hypothesis: first coordinate non-constant
  bool nonconst = false;
  for (const auto& [u, c] : job.witt_coords[0])
    for (int32_t e : u)
      if (e != 0) nonconst = true;
  if (!nonconst)
    fail(Err::ConstantFirstCoordinate, "the first Witt coordinate must be non-constant");

  if (j.contains("J")) {
    for (const auto& e : j["J"]) {
      int v = e.get<int>();
      if (v < 1 || v > job.n) schema_fail("J entries must lie in [1,n]");
      job.J.push_back(v);
    }
    std::sort(job.J.begin(), job.J.end());
    job.J.erase(std::unique(job.J.begin(), job.J.end()), job.J.end());
  }
  for (const auto& level : job.witt_coords)
    for (const auto& [u, c] : level)
      for (int jj : job.J)
        if (u[static_cast<size_t>(jj - 1)] < 0)
          fail(Err::NegativeExponentInJ,
               "support has a negative exponent on J coordinate " + std::to_string(jj));

  if (j.contains("kmax")) job.kmax = get_ll(j, "kmax", 1, 64);
  if (j.contains("guard")) job.guard = get_ll(j, "guard", 1, 64);
  if (j.contains("smax")) job.smax = static_cast<int>(get_ll(j, "smax", 1, 8));
  if (j.contains("budget")) job.budget = get_ll(j, "budget", 1, 1LL << 40);
  if (j.contains("twist")) {
    job.twist = get_ll(j, "twist", 1, ll_pow(job.p, static_cast<unsigned>(job.m)) - 1);
    if (ll_gcd(*job.twist, job.p) != 1) schema_fail("twist must be coprime to p");
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) schema_fail("'tolerance' must be a number");
    job.tolerance = j["tolerance"].get<double>();
    if (*job.tolerance <= 0) schema_fail("'tolerance' must be positive");
  }
  return job;
}

std::string serialize_job(const JobSpec& job) {
  json j;
  j["schema_version"] = 1;
  j["p"] = job.p;
  j["a"] = job.a;
  j["m"] = job.m;
  j["n"] = job.n;
  if (job.modulus) j["modulus"] = *job.modulus;
  json coords = json::array();
  for (const auto& level : job.witt_coords) {
    json lv = json::array();
    for (const auto& [u, c] : level) lv.push_back(json{{"u", u}, {"c", c}});
    coords.push_back(std::move(lv));
  }
  j["witt_coords"] = std::move(coords);
  if (!job.J.empty()) j["J"] = job.J;
  if (job.kmax) j["kmax"] = *job.kmax;
  if (job.guard) j["guard"] = *job.guard;
  if (job.smax) j["smax"] = *job.smax;
  if (job.budget) j["budget"] = *job.budget;
  if (job.twist) j["twist"] = *job.twist;
  if (job.tolerance) j["tolerance"] = *job.tolerance;
  return j.dump();
}

Pipeline run_pipeline(const JobSpec& job, Command cmd, int threads) {
  Pipeline pl;
  pl.job = job;
  pl.lim = limits_for(job);
  pl.Fq = std::make_shared<FieldCtx>(job.p, job.a, job.modulus, pl.lim);

  pl.f.p = job.p;
  pl.f.m = job.m;
  pl.f.n = job.n;
  pl.f.coords.assign(static_cast<size_t>(job.m), LaurentPoly{});
  for (int i = 0; i < job.m; ++i)
    for (const auto& [u, c] : job.witt_coords[static_cast<size_t>(i)])
      pl.f.coords[static_cast<size_t>(i)].terms.emplace(u, pl.Fq->from_coeffs(c));

  pl.dec = decompose(pl.f, *pl.Fq, pl.lim);
  if (cmd == Command::decompose) return pl;

  pl.nd = build_polyhedron(pl.dec, job.p, job.m, job.n, pl.lim);
  if (pl.nd->full_dim()) pl.hd = p_delta(*pl.nd, pl.lim);
  if (!job.J.empty()) pl.commode = slice_and_commode(*pl.nd, job.J, pl.lim);
  if (cmd == Command::polytope) return pl;

  pl.nondeg = check_nondegenerate(pl.dec, *pl.nd, job.m, *pl.Fq, job.smax.value_or(2), pl.lim);
  if (cmd == Command::nondegen) return pl;

  // decide the series order
  const bool degenerate = pl.nondeg->status == NondegenStatus::Degenerate;
  const bool commode_ok = job.J.empty() || (pl.commode && pl.commode->commode);
  long long K;
  if (job.kmax) {
    K = *job.kmax;
  } else if (!degenerate && pl.nd->full_dim() && commode_ok) {
    HodgeSide hs = hodge_side(*pl.nd, job.J.empty() ? nullptr : &*pl.commode, pl.lim);
    long long d = static_cast<long long>(hs.expected_degree);
    K = d + std::max<long long>(job.guard.value_or(std::max<long long>(2, d)), 1);
  } else {
    // rational-reconstruction route: largest affordable order up to 13
    K = 13;
    while (K > 0) {
      __int128 total = 0;
      bool ok = true;
      for (int k = 1; k <= K; ++k) {
        long long dsz = sum_domain_size(pl.Fq->size(), k, job.n, job.J.size());
        if (dsz < 0) {
          ok = false;
          break;
        }
        total += dsz;
      }
      if (ok && total <= pl.lim.domain_budget) break;
      --K;
    }
    if (K < 3) fail(Err::BudgetExceeded, "cannot afford even a 3-term series under the budget");
  }
  {
    __int128 total = 0;
    for (int k = 1; k <= K; ++k) {
      long long dsz = sum_domain_size(pl.Fq->size(), k, job.n, job.J.size());
      if (dsz < 0)
        fail(Err::BudgetExceeded, "sum domain for k=" + std::to_string(k) + " overflows");
      total += dsz;
    }
    if (total > pl.lim.domain_budget)
      fail(Err::BudgetExceeded, "total domain of " + std::to_string(static_cast<long long>(total)) +
                                    " evaluations exceeds budget " +
                                    std::to_string(pl.lim.domain_budget));
  }
  pl.K = K;

  SumOptions so;
  so.J = job.J;
  so.sign = job.J.empty() ? SignConvention::alternating : SignConvention::plain;
  so.twist = job.twist.value_or(1);
  so.threads = threads;
  for (int k = 1; k <= K; ++k) {
    so.k = k;
    pl.sums.push_back(exp_sum(pl.f, *pl.Fq, so, pl.lim));
  }
  if (cmd == Command::sums) return pl;

  // Whole-field sums are reported unsigned; the L-series feeding the
  // polygon checks uses the trace-formula normalization (-1)^(n-1) S_k, which
  // coincides with the reported values except for J != {} with n even.
  std::vector<CyclotomicInt> svals;
  for (const auto& s : pl.sums)
    svals.push_back(!job.J.empty() && job.n % 2 == 0 ? cyc_neg(s.value) : s.value);
  pl.series = l_series_from_sums(job.p, job.m, svals);

  bool extraction_attempted = false;
  if (!degenerate && pl.nd->full_dim() && commode_ok) {
    HodgeSide hs = hodge_side(*pl.nd, job.J.empty() ? nullptr : &*pl.commode, pl.lim);
    long long d = static_cast<long long>(hs.expected_degree);
    if (d >= 0 && K >= d + 1) {
      extraction_attempted = true;
      try {
        pl.poly = extract_polynomial(*pl.series, d, K - d);
      } catch (const Error& e) {
        if (e.code() != Err::NotPolynomial && e.code() != Err::NonIntegralCoefficient) throw;
        pl.route_note = std::string("polynomial extraction failed (") + e.what() +
                        "); falling back to rational reconstruction";
      }
    } else {
      pl.route_note = "series order " + std::to_string(K) + " is below the expected degree " +
                      std::to_string(d) + "; raise kmax to certify polynomiality";
    }
  } else if (!job.J.empty() && !commode_ok) {
    pl.route_note = "polytope is not commode with respect to J; using rational reconstruction";
  } else if (degenerate) {
    pl.route_note = "f is degenerate; using rational reconstruction";
  } else {
    pl.route_note = "polytope is dimension-deficient; using rational reconstruction";
  }
  if (!pl.poly) {
    int dmax = static_cast<int>((K - 1) / 2);
    if (dmax >= 1) {
      try {
        pl.ratfn = rational_reconstruct(*pl.series, dmax);
      } catch (const Error& e) {
        if (e.code() != Err::Inconclusive) throw;
        pl.route_note = std::string(pl.route_note.value_or("")) + "; reconstruction inconclusive";
      }
    }
  }
  if (cmd == Command::lfunction) return pl;

  VerifyInput vi;
  vi.nd = &*pl.nd;
  vi.slices = pl.commode ? &*pl.commode : nullptr;
  vi.nondegen = pl.nondeg->status;
  vi.poly = pl.poly ? &*pl.poly : nullptr;
  vi.ratfn = pl.ratfn ? &*pl.ratfn : nullptr;
  vi.polynomial_expected = extraction_attempted;
  vi.a = job.a;
  vi.J = job.J;
  vi.weight_tolerance = pl.lim.weight_tolerance;
  pl.report = verify(vi, pl.lim);
  return pl;
}

std::string report_json(const Pipeline& pl, Command cmd) {
  json j;
  j["schema_version"] = 1;
  j["command"] = [&] {
    switch (cmd) {
      case Command::decompose: return "decompose";
      case Command::polytope: return "polytope";
      case Command::nondegen: return "nondegen";
      case Command::sums: return "sums";
      case Command::lfunction: return "lfunction";
      case Command::verify: return "verify";
    }
    return "?";
  }();
  j["job"] = json::parse(serialize_job(pl.job));
  j["field"] = json{{"p", pl.job.p}, {"a", pl.job.a}, {"modulus", pl.Fq->modulus()}};

  json dec = json::array();
  for (const auto& t : pl.dec.terms)
    dec.push_back(json{{"level", t.level}, {"u", t.u}, {"c", t.a.c}});
  j["decomposition"] = std::move(dec);

  if (pl.nd) {
    json poly;
    poly["dim"] = pl.nd->dim;
    poly["n"] = pl.nd->n;
    poly["vertices"] = pl.nd->verts;
    json facets = json::array();
    for (const auto& f : pl.nd->facets) facets.push_back(json{{"w", f.w}, {"c", f.c}});
    poly["facets"] = std::move(facets);
    poly["D"] = pl.nd->D;
    poly["d_lcm_override"] = pl.nd->d_lcm_override;
    if (pl.hd) {
      poly["weights"] = pl.hd->weights;
      poly["pcoeffs"] = int_vec_json(pl.hd->pcoeffs);
      poly["nvol"] = pl.hd->nvol.str();
      poly["hodge"] = chain_json(pl.hd->hodge);
      if (pl.nd->n <= 2) poly["s_delta"] = boundary_through_origin(*pl.nd);
    }
    j["polytope"] = std::move(poly);
  }

  if (pl.commode) {
    json cm;
    cm["verdict"] = pl.commode->commode;
    json slices = json::array();
    for (const auto& sl : pl.commode->slices) {
      json s;
      s["C"] = sl.C;
      s["dim"] = sl.delta.dim;
      s["ambient"] = sl.delta.n;
      s["D"] = sl.delta.D;
      if (sl.delta.dim == sl.delta.n) s["nvol"] = volume_normalized(sl.delta).str();
      slices.push_back(std::move(s));
    }
    cm["slices"] = std::move(slices);
    cm["note"] = "slice Hodge polynomials are computed intrinsically in dimension n-|C|";
    j["commode"] = std::move(cm);
  }

  if (pl.nondeg) {
    json nv;
    switch (pl.nondeg->status) {
      case NondegenStatus::NonDegenerateExact: nv["status"] = "NonDegenerateExact"; break;
      case NondegenStatus::NonDegenerateHeuristic:
        nv["status"] = "NonDegenerateHeuristic";
        nv["smax"] = pl.nondeg->smax;
        break;
      case NondegenStatus::Degenerate: nv["status"] = "Degenerate"; break;
    }
    if (pl.nondeg->witness) {
      const auto& w = *pl.nondeg->witness;
      json wj;
      wj["face_index"] = w.face_index;
      wj["ext_degree"] = w.ext_degree;
      json pt = json::array();
      for (const auto& x : w.point) pt.push_back(x.c);
      wj["point"] = std::move(pt);
      wj["field_modulus"] = w.field->modulus();
      nv["witness"] = std::move(wj);
    }
    j["nondegen"] = std::move(nv);
  }

  if (!pl.sums.empty()) {
    json sums = json::array();
    for (const auto& s : pl.sums) {
      sums.push_back(json{{"k", s.k}, {"profile", s.profile}, {"value", cyc_json(s.value)}});
    }
    j["sums"] = std::move(sums);
    j["series_order"] = pl.K;
  }

  if (pl.series && (cmd == Command::lfunction || cmd == Command::verify)) {
    json lf;
    if (pl.poly) {
      json coeffs = json::array();
      for (const auto& c : pl.poly->coeffs) coeffs.push_back(cyc_json(c));
      lf["polynomial"] = std::move(coeffs);
      lf["degree"] = pl.poly->degree();
    }
    if (pl.ratfn) {
      json P = json::array(), Q = json::array();
      for (const auto& c : pl.ratfn->P) P.push_back(cycrat_json(c));
      for (const auto& c : pl.ratfn->Q) Q.push_back(cycrat_json(c));
      lf["ratfn"] = json{{"P", std::move(P)}, {"Q", std::move(Q)},
                         {"total_degree", pl.ratfn->total_degree()}};
    }
    if (pl.route_note) lf["route_note"] = *pl.route_note;
    lf["series_sign"] = (!pl.job.J.empty() && pl.job.n % 2 == 0)
                            ? "-1 (trace-formula normalization of the whole-field sums)"
                            : "+1";
    j["lfunction"] = std::move(lf);
  }

  if (pl.report) {
    const auto& r = *pl.report;
    j["polygons"] = json{{"np", chain_json(r.np)}, {"hp", chain_json(r.hp)}};
    j["hodge_side"] =
        json{{"coeffs", int_vec_json(r.hodge_coeffs)}, {"D", r.hodge_D}, {"nonneg", r.hodge_nonneg}};
    j["degree"] = r.degree;
    j["expected_degree"] = r.expected_degree.str();
    j["degree_bound"] = r.degree_bound.str();
    j["verdicts"] = json{{"degree_bound", verdict_str(r.degree_bound_ok)},
                         {"polynomial", verdict_str(r.polynomial_ok)},
                         {"degree_matches_volume", verdict_str(r.degree_matches_volume)},
                         {"np_above_hp", verdict_str(r.np_above_hp)},
                         {"endpoints_match", verdict_str(r.endpoints_match)},
                         {"weights_pure", verdict_str(r.weights_pure)}};
    if (!r.weight_moduli.empty()) {
      j["weights"] = json{{"moduli", r.weight_moduli},
                          {"target", r.weight_target},
                          {"root_residual", r.root_residual}};
    }
  }
  return j.dump(2) + "\n";
}

std::string report_summary(const Pipeline& pl, Command cmd) {
  std::ostringstream os;
  os << "p=" << pl.job.p << " a=" << pl.job.a << " m=" << pl.job.m << " n=" << pl.job.n;
  if (!pl.job.J.empty()) {
    os << " J={";
    for (size_t i = 0; i < pl.job.J.size(); ++i) os << (i ? "," : "") << pl.job.J[i];
    os << "}";
  }
  os << "\n";
  os << "decomposition: " << pl.dec.terms.size() << " lambda terms\n";
  if (pl.nd) {
    os << "polytope: dim " << pl.nd->dim << ", " << pl.nd->verts.size() << " vertices, D = "
       << pl.nd->D;
    if (pl.hd) os << ", n!Vol = " << pl.hd->nvol.str();
    os << "\n";
  }
  if (pl.commode) os << "commode: " << (pl.commode->commode ? "true" : "false") << "\n";
  if (pl.nondeg) {
    os << "nondegen: ";
    switch (pl.nondeg->status) {
      case NondegenStatus::NonDegenerateExact: os << "NonDegenerateExact"; break;
      case NondegenStatus::NonDegenerateHeuristic:
        os << "NonDegenerateHeuristic(s_max=" << pl.nondeg->smax << ")";
        break;
      case NondegenStatus::Degenerate:
        os << "Degenerate";
        if (pl.nondeg->witness) os << " (witness on face " << pl.nondeg->witness->face_index << ")";
        break;
    }
    os << "\n";
  }
  for (const auto& s : pl.sums) os << "S_" << s.k << " = " << cyc_str(s.value) << "\n";
  if (pl.poly) {
    os << "L(t) polynomial of degree " << pl.poly->degree() << ", coefficients:";
    for (const auto& c : pl.poly->coeffs) os << " " << cyc_str(c);
    os << "\n";
  } else if (pl.ratfn) {
    os << "L(t) = P/Q with deg P = " << pl.ratfn->P.size() - 1 << ", deg Q = "
       << pl.ratfn->Q.size() - 1 << "\n";
  }
  if (pl.route_note) os << "note: " << *pl.route_note << "\n";
  if (pl.report) {
    const auto& r = *pl.report;
    auto line = [&](const char* name, Verdict v) { os << "  " << name << ": " << verdict_str(v) << "\n"; };
    os << "verdicts:\n";
    line("degree_bound", r.degree_bound_ok);
    line("polynomial", r.polynomial_ok);
    line("degree_matches_volume", r.degree_matches_volume);
    line("np_above_hp", r.np_above_hp);
    line("endpoints_match", r.endpoints_match);
    line("weights_pure", r.weights_pure);
  }
  (void)cmd;
  return os.str();
}

int report_exit_code(const Pipeline& pl, Command cmd) {
  (void)cmd;
  if (pl.report && !pl.report->all_passed()) return 1;
  return 0;
}

std::string polygon_svg(const PolygonChain& np, const PolygonChain& hp) {
  const double W = 640, H = 480, pad = 48;
  double xmax = 1, ymax = 1;
  for (const auto* ch : {&np, &hp})
    for (const auto& [x, y] : ch->v) {
      xmax = std::max(xmax, static_cast<double>(x));
      ymax = std::max(ymax, static_cast<double>(y));
    }
  auto sx = [&](double x) { return pad + x / xmax * (W - 2 * pad); };
  auto sy = [&](double y) { return H - pad - y / ymax * (H - 2 * pad); };
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << sx(0) << "' y1='" << sy(0) << "' x2='" << sx(xmax) << "' y2='" << sy(0)
     << "' stroke='#888'/>\n";
  os << "<line x1='" << sx(0) << "' y1='" << sy(0) << "' x2='" << sx(0) << "' y2='" << sy(ymax)
     << "' stroke='#888'/>\n";
  auto draw = [&](const PolygonChain& ch, const char* color, const char* name, double ty) {
    if (ch.v.empty()) return;
    os << "<polyline fill='none' stroke='" << color << "' stroke-width='2' points='";
    for (const auto& [x, y] : ch.v)
      os << sx(static_cast<double>(x)) << "," << sy(static_cast<double>(y)) << " ";
    os << "'/>\n";
    for (const auto& [x, y] : ch.v)
      os << "<circle cx='" << sx(static_cast<double>(x)) << "' cy='" << sy(static_cast<double>(y))
         << "' r='3' fill='" << color << "'/>\n";
    os << "<text x='" << W - pad - 150 << "' y='" << ty << "' fill='" << color << "'>" << name
       << "</text>\n";
  };
  draw(hp, "#1f77b4", "Hodge polygon", pad);
  draw(np, "#d62728", "Newton polygon", pad + 18);
  os << "</svg>\n";
  return os.str();
}

}  // namespace wittsum
