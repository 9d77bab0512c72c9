#include "wallcross/reduce.hpp"

#include <algorithm>
#include <sstream>

namespace wallcross {

namespace {

ReductionStep& add_step(ReductionReport& rep, std::string name, std::string detail, bool certified) {
  ReductionStep s;
  s.index = static_cast<int>(rep.steps.size());
  s.name = std::move(name);
  s.detail = std::move(detail);
  s.certified = certified;
  rep.steps.push_back(std::move(s));
  return rep.steps.back();
}

// Crossing relation for one wall of v_n: the pair terms carry the two-term
// coefficient, longer tuples an opaque one.
Relation crossing_relation(const NumClass& vn, const Wall& wall, std::size_t index, const CY3Context& ctx,
                           bool& exact) {
  std::string up = std::to_string(index) + "+", down = std::to_string(index) + "-";
  Relation rel;
  rel.lhs = InvariantExpr(J_bw(up, vn));
  InvariantExpr rhs(J_bw(down, vn));
  std::vector<NumClass> parts{vn};
  for (const Decomposition& d : wall.decompositions) {
    InvariantExpr coeff;
    try {
      coeff = InvariantExpr(two_term_coeff(d.first, d.second, ctx));
    } catch (const Error&) {
      coeff = InvariantExpr::opaque({"C2", {d.first, d.second}});
      exact = false;
    }
    rhs += coeff * InvariantExpr(J_bw(down, d.first)) * InvariantExpr(J_bw(down, d.second));
    parts.push_back(d.first);
    parts.push_back(d.second);
  }
  try {
    for (const ExpansionTerm& t : epsilon_expansion(vn, parts, ctx).terms) {
      if (t.tuple.size() < 3) continue;
      InvariantExpr term = InvariantExpr::opaque({"C" + std::to_string(t.tuple.size()), t.tuple});
      for (const NumClass& a : t.tuple) term = term * InvariantExpr(J_bw(down, a));
      rhs += term;
      exact = false;
    }
  } catch (const Error&) {
    rhs += InvariantExpr::opaque({"Rest", {vn}});
    exact = false;
  }
  rel.rhs = rhs;
  return rel;
}

}  // namespace

bool ReductionReport::certified() const {
  return std::all_of(steps.begin(), steps.end(), [](const ReductionStep& s) { return s.certified; });
}

std::string ReductionReport::formula() const { return js.relation.render(aliases); }

std::string ReductionReport::log() const {
  std::ostringstream os;
  for (const ReductionStep& s : steps) {
    os << "[" << s.index << "] " << s.name << (s.certified ? " (certified)" : " (UNCERTIFIED)") << ": " << s.detail
       << "\n";
  }
  return os.str();
}

ReductionReport rank_reduce(const NumClass& v_in, std::int64_t n, const CY3Context& ctx,
                            const ReductionOptions& options) {
  ctx.validate();
  if (v_in.r < 1) throw Error(ErrorCode::RankTooLow, "rank_reduce needs rank >= 1, got " + v_in.str());
  if (n < 1) throw Error(ErrorCode::Precondition, "n must be positive");
  ReductionReport rep;
  rep.input = v_in;
  rep.n = n;

  // (0) normalization
  if (!v_in.c1.is_zero()) {
    Normalized nz = normalize_tH(v_in, ctx);
    rep.v = nz.v;
    rep.twist = nz.t;
    bool integral = nz.t.is_integer();
    add_step(rep, "normalize", "twisted by t = " + nz.t.str() + " to " + rep.v.str() +
                                   (integral ? "" : "; the twist is not by a line bundle"),
             integral);
  } else {
    rep.v = v_in;
    rep.twist = Rational(0);
    add_step(rep, "normalize", "c1 = 0, no twist", true);
  }
  const NumClass& v = rep.v;
  rep.vn = make_vn(v, n, ctx);
  rep.aliases[rep.vn] = "v_n";
  rep.aliases[v] = "v";
  VnBounds vb = options.bounds ? *options.bounds : trivial_bounds(v);
  if (vb.r != v.r) throw Error(ErrorCode::Precondition, "bounds rank differs from r(v)");

  // (1) lines and threshold
  std::string lines;
  try {
    rep.ell_f = ell_f(rep.vn, ctx);
    lines += "ell_f: " + rep.ell_f->equation();
  } catch (const Error& e) {
    lines += std::string("ell_f: ") + e.what();
  }
  try {
    rep.ell_js = ell_js(v, n, ctx);
    lines += "; ell_JS: " + rep.ell_js->equation();
  } catch (const Error& e) {
    lines += std::string("; ell_JS: ") + e.what();
  }
  bool n_ok = false;
  try {
    rep.suggested_n = suggest_n(v, vb, ctx);
    n_ok = n >= *rep.suggested_n;
    lines += "; suggested n = " + std::to_string(*rep.suggested_n);
  } catch (const Error& e) {
    lines += std::string("; suggest_n: ") + e.what();
  }
  add_step(rep, "lines", lines, n_ok);

  // certificate that nothing of class v_n is semistable below ell_JS
  bool below_empty = false;
  std::string cert_detail;
  if (v.r == 1) {
    below_empty = n_ok;
    cert_detail = n_ok ? "rank 1: ell_JS is the only wall for v_n" : "rank 1 but n is below the suggested threshold";
  } else if (v.r == 2) {
    QuarticCertificate qc = rank2_no_wall_certificate(
        n, Interval{Rational(-vb.p1), Rational(vb.p2)}, Interval{Rational(-vb.q), Rational(vb.q)}, ctx,
        options.certificate);
    below_empty = qc.passed && n_ok;
    if (qc.passed) {
      cert_detail = "rank 2 quartic certificate passed at " + std::to_string(qc.points.size()) + " points";
    } else {
      cert_detail = "rank 2 quartic certificate failed at c = " + qc.violation->c.str();
    }
    if (!n_ok) cert_detail += "; n is below the suggested threshold";
  } else {
    cert_detail = "emptiness below ell_JS is not available for rank " + std::to_string(v.r);
  }

  // (2) walls of v_n
  bool walls_ok = false;
  if (options.region) {
    try {
      rep.walls = enumerate_walls(rep.vn, *options.region, ctx, EngineOptions{options.threads});
      walls_ok = true;
      add_step(rep, "walls", std::to_string(rep.walls.size()) + " walls for v_n in the region", true);
    } catch (const Error& e) {
      add_step(rep, "walls", std::string("enumeration failed: ") + e.what(), false);
    }
  } else {
    add_step(rep, "walls", below_empty && v.r == 1 ? "no region; " + cert_detail : "no region supplied",
             below_empty && v.r == 1);
  }

  // (3) classification
  std::size_t unclassified = 0;
  for (Wall& w : rep.walls) {
    classify_wall(rep.vn, v, n, w, ctx, vb);
    if (w.classification.count(WallType::Unclassified)) ++unclassified;
  }
  add_step(rep, "classify",
           std::to_string(rep.walls.size()) + " walls, " + std::to_string(unclassified) + " unclassified",
           walls_ok ? unclassified == 0 : rep.steps.back().certified);

  // (4) crossings off the JS line
  bool crossings_exact = true;
  std::vector<std::vector<NumClass>> residual;
  for (std::size_t i = 0; i < rep.walls.size(); ++i) {
    const Wall& w = rep.walls[i];
    if (rep.ell_js && w.line == *rep.ell_js) {
      for (const Decomposition& d : w.decompositions) {
        if (d.first == v || d.second == v) continue;
        residual.push_back({d.first, d.second});
      }
      continue;
    }
    rep.wall_relations.push_back(crossing_relation(rep.vn, w, i, ctx, crossings_exact));
  }
  add_step(rep, "crossings", std::to_string(rep.wall_relations.size()) + " crossing relations off ell_JS",
           crossings_exact);

  // (5) the JS wall
  rep.js = js_wall_relation(v, n, ctx, residual, below_empty);
  add_step(rep, "js-wall",
           "chi(v(n)) = " + rep.js.chi.str() + ", leading coefficient " + rep.js.leading.str() + "; " + cert_detail,
           below_empty);
  if (options.require_certificate && !below_empty) {
    throw Error(ErrorCode::CertificateFailed, cert_detail);
  }

  // (6) solve for J_inf(v)
  if (rep.js.leading.is_zero()) {
    throw Error(ErrorCode::CannotIsolate, "chi(v(n)) * torsion = 0 at n = " + std::to_string(n) +
                                              "; the JS relation cannot be solved for J(v), try another n");
  }
  InvariantExpr lead = InvariantExpr(rep.js.leading) * InvariantExpr(J_inf(v));
  InvariantExpr rest = rep.js.relation.rhs - lead;
  rep.solution.lhs = InvariantExpr(J_inf(v));
  rep.solution.rhs = InvariantExpr(Rational(1) / rep.js.leading) * (rep.js.relation.lhs - rest);
  add_step(rep, "solve", rep.solution.render(rep.aliases), !rep.solution.rhs.has_opaque());

  // (7) large volume -> tilt -> Gieseker
  auto to_tilt = [](const InvariantSymbol& s) {
    return s.label == Label::LargeVolume ? J_ti(s.cls) : s;
  };
  rep.tilt_solution.lhs = rep.solution.lhs.map_symbols(to_tilt);
  rep.tilt_solution.rhs = rep.solution.rhs.map_symbols(to_tilt);
  add_step(rep, "large-volume-to-tilt", "J_inf(a) = J_ti(a); " + rep.tilt_solution.render(rep.aliases), true);

  Relation skel;
  bool gieseker_exact = true;
  if (v.r == 1) {
    skel = tilt_gieseker_relation(v, {}, ctx);
  } else {
    skel.lhs = InvariantExpr(J_ti(v));
    skel.rhs = InvariantExpr(J_gie(v)) + InvariantExpr::opaque({"G", {v}});
    gieseker_exact = false;
  }
  rep.gieseker_skeletons.push_back(skel);
  rep.gieseker_solution.lhs = InvariantExpr(J_gie(v));
  rep.gieseker_solution.rhs = rep.tilt_solution.rhs - (skel.rhs - InvariantExpr(J_gie(v)));
  add_step(rep, "tilt-to-gieseker",
           skel.render(rep.aliases) + (gieseker_exact ? "" : " (remainder over unlisted decompositions)"),
           gieseker_exact);
  return rep;
}

}  // namespace wallcross
