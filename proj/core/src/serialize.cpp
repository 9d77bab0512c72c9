#include "wallcross/serialize.hpp"

namespace wallcross {

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(to_string(z));
}

std::int64_t int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rational x = Rational::parse(j.get<std::string>());
    if (x.is_integer() && x.num().fits_slong_p()) return x.num().get_si();
  }
  throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an object");
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw Error(ErrorCode::ParseError, "unknown key '" + k + "' in " + what);
  }
}

json symbol_json(const InvariantSymbol& s) {
  return json{{"label", std::string(label_name(s.label))}, {"chamber", s.chamber}, {"class", to_json(s.cls)}};
}

InvariantSymbol symbol_from_json(const json& j) {
  return InvariantSymbol{parse_label(field(j, "label").get<std::string>()), field(j, "chamber").get<std::string>(),
                         class_from_json(field(j, "class"))};
}

json opaque_json(const OpaqueCoefficient& c) {
  json cls = json::array();
  for (const auto& x : c.classes) cls.push_back(to_json(x));
  return json{{"name", c.name}, {"classes", cls}};
}

OpaqueCoefficient opaque_from_json(const json& j) {
  OpaqueCoefficient c;
  c.name = field(j, "name").get<std::string>();
  for (const auto& x : field(j, "classes")) c.classes.push_back(class_from_json(x));
  return c;
}

json types_json(const std::set<WallType>& types) {
  json out = json::array();
  for (WallType t : types) out.push_back(std::string(wall_type_name(t)));
  return out;
}

std::set<WallType> types_from_json(const json& j) {
  std::set<WallType> out;
  for (const auto& t : j) out.insert(parse_wall_type(t.get<std::string>()));
  return out;
}

}  // namespace

json to_json(const Rational& x) {
  if (x.is_integer() && x.num().fits_slong_p()) return json(static_cast<std::int64_t>(x.num().get_si()));
  return json(x.str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "rational values must be integers or strings \"p/q\", got " + j.dump());
}

json to_json(const NumClass& v) {
  json out = json::array({json(v.r), to_json(v.c1), to_json(v.c2), to_json(v.c3)});
  if (v.c1c2) out.push_back(to_json(*v.c1c2));
  return out;
}

NumClass class_from_json(const json& j) {
  if (!j.is_array() || (j.size() != 4 && j.size() != 5)) {
    throw Error(ErrorCode::ParseError, "a class is [r, c1, c2, c3] or [r, c1, c2, c3, c1c2]");
  }
  NumClass v(int_from_json(j[0], "rank"), rational_from_json(j[1]), rational_from_json(j[2]),
             rational_from_json(j[3]));
  if (j.size() == 5) v.c1c2 = rational_from_json(j[4]);
  return v;
}

json to_json(const CY3Context& ctx) {
  return json{{"h3", ctx.h3},
              {"c2h", to_json(ctx.c2h)},
              {"torsion", ctx.torsion},
              {"lattice", json::array({ctx.lattice[0], ctx.lattice[1], ctx.lattice[2]})},
              {"strict", ctx.strict}};
}

CY3Context context_from_json(const json& j) {
  expect_keys(j, {"h3", "c2h", "torsion", "lattice", "strict"}, "context");
  CY3Context ctx;
  ctx.h3 = int_from_json(field(j, "h3"), "h3");
  ctx.c2h = rational_from_json(field(j, "c2h"));
  if (j.contains("torsion")) ctx.torsion = int_from_json(j.at("torsion"), "torsion");
  if (j.contains("lattice")) {
    const json& d = j.at("lattice");
    if (!d.is_array() || d.size() != 3) throw Error(ErrorCode::ParseError, "lattice must have three entries");
    for (std::size_t i = 0; i < 3; ++i) ctx.lattice[i] = int_from_json(d[i], "lattice");
  }
  if (j.contains("strict")) {
    if (!j.at("strict").is_boolean()) throw Error(ErrorCode::ParseError, "strict must be a boolean");
    ctx.strict = j.at("strict").get<bool>();
  }
  ctx.validate();
  return ctx;
}

json to_json(const Region& r) {
  return json{{"b", json::array({to_json(r.b_lo), to_json(r.b_hi)})},
              {"w", json::array({to_json(r.w_lo), to_json(r.w_hi)})}};
}

Region region_from_json(const json& j) {
  expect_keys(j, {"b", "w"}, "region");
  const json& b = field(j, "b");
  const json& w = field(j, "w");
  if (!b.is_array() || b.size() != 2 || !w.is_array() || w.size() != 2) {
    throw Error(ErrorCode::ParseError, "region needs b: [lo, hi] and w: [lo, hi]");
  }
  return Region{rational_from_json(b[0]), rational_from_json(b[1]), rational_from_json(w[0]),
                rational_from_json(w[1])};
}

json to_json(const VnBounds& vb) { return json{{"r", vb.r}, {"p1", vb.p1}, {"p2", vb.p2}, {"q", vb.q}}; }

VnBounds bounds_from_json(const json& j) {
  expect_keys(j, {"r", "p1", "p2", "q"}, "bounds");
  VnBounds vb;
  vb.r = int_from_json(field(j, "r"), "r");
  vb.p1 = int_from_json(field(j, "p1"), "p1");
  vb.p2 = int_from_json(field(j, "p2"), "p2");
  vb.q = int_from_json(field(j, "q"), "q");
  vb.validate();
  return vb;
}

json to_json(const WallLine& l) {
  auto t = l.triple();
  return json::array({integer_json(t[0]), integer_json(t[1]), integer_json(t[2])});
}

WallLine line_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "a line is [A, B, C]");
  return WallLine::from_coefficients(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
}

json to_json(const Wall& w) {
  json decomps = json::array();
  json dtypes = json::array();
  for (const auto& d : w.decompositions) {
    decomps.push_back(json::array({to_json(d.first), to_json(d.second)}));
    dtypes.push_back(types_json(d.types));
  }
  return json{{"line", to_json(w.line)},
              {"equation", w.line.equation()},
              {"decompositions", decomps},
              {"decomposition_types", dtypes},
              {"types", types_json(w.classification)},
              {"witness", json::array({w.witness.b.str(), w.witness.w.str()})}};
}

Wall wall_from_json(const json& j) {
  Wall w;
  w.line = line_from_json(field(j, "line"));
  const json& ds = field(j, "decompositions");
  const json* dt = j.contains("decomposition_types") ? &j.at("decomposition_types") : nullptr;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Decomposition d{class_from_json(ds[i].at(0)), class_from_json(ds[i].at(1)), {}};
    if (dt) d.types = types_from_json(dt->at(i));
    w.decompositions.push_back(std::move(d));
  }
  w.classification = types_from_json(field(j, "types"));
  const json& wit = field(j, "witness");
  w.witness = PlanePoint{rational_from_json(wit.at(0)), rational_from_json(wit.at(1))};
  return w;
}

json walls_to_json(const std::vector<Wall>& walls) {
  json out = json::array();
  for (const auto& w : walls) out.push_back(to_json(w));
  return out;
}

std::vector<Wall> walls_from_json(const json& j) {
  std::vector<Wall> out;
  for (const auto& w : j) out.push_back(wall_from_json(w));
  return out;
}

json to_json(const InvariantExpr& e) {
  json out = json::array();
  for (const Monomial& m : e.terms()) {
    json syms = json::array();
    for (const auto& s : m.symbols) syms.push_back(symbol_json(s));
    json opq = json::array();
    for (const auto& o : m.opaque) opq.push_back(opaque_json(o));
    out.push_back(json{{"coeff", m.coeff.str()}, {"symbols", syms}, {"opaque", opq}});
  }
  return out;
}

InvariantExpr expr_from_json(const json& j) {
  std::vector<Monomial> terms;
  for (const auto& t : j) {
    Monomial m;
    m.coeff = rational_from_json(field(t, "coeff"));
    for (const auto& s : field(t, "symbols")) m.symbols.push_back(symbol_from_json(s));
    for (const auto& o : field(t, "opaque")) m.opaque.push_back(opaque_from_json(o));
    terms.push_back(std::move(m));
  }
  return InvariantExpr::from_monomials(std::move(terms));
}

json to_json(const Relation& r) { return json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}}; }

Relation relation_from_json(const json& j) {
  return Relation{expr_from_json(field(j, "lhs")), expr_from_json(field(j, "rhs"))};
}

json to_json(const QuarticCertificate& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    pts.push_back(json{{"c", p.c.str()},
                       {"betaH", p.betaH.str()},
                       {"m", p.m.str()},
                       {"value", p.value.str()},
                       {"sign", p.value.sign()},
                       {"kind", p.kind}});
  }
  json out{{"passed", c.passed}, {"points", pts}};
  if (c.violation) out["violation"] = json{{"c", c.violation->c.str()}, {"betaH", c.violation->betaH.str()},
                                           {"m", c.violation->m.str()}, {"value", c.violation->value.str()}};
  return out;
}

json to_json(const ReductionReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) {
    steps.push_back(json{{"index", s.index}, {"name", s.name}, {"detail", s.detail}, {"certified", s.certified}});
  }
  json rels = json::array();
  for (const auto& r : rep.wall_relations) rels.push_back(json{{"text", r.render(rep.aliases)}, {"ast", to_json(r)}});
  json skels = json::array();
  for (const auto& r : rep.gieseker_skeletons) {
    skels.push_back(json{{"text", r.render(rep.aliases)}, {"ast", to_json(r)}});
  }
  json out{{"input", to_json(rep.input)},
           {"v", to_json(rep.v)},
           {"twist", to_json(rep.twist)},
           {"n", rep.n},
           {"v_n", to_json(rep.vn)},
           {"ell_f", rep.ell_f ? json(rep.ell_f->equation()) : json(nullptr)},
           {"ell_js", rep.ell_js ? json(rep.ell_js->equation()) : json(nullptr)},
           {"suggested_n", rep.suggested_n ? json(*rep.suggested_n) : json(nullptr)},
           {"walls", walls_to_json(rep.walls)},
           {"formula", rep.formula()},
           {"js_relation", to_json(rep.js.relation)},
           {"chi", to_json(rep.js.chi)},
           {"leading", to_json(rep.js.leading)},
           {"wall_relations", rels},
           {"solution", json{{"text", rep.solution.render(rep.aliases)}, {"ast", to_json(rep.solution)}}},
           {"tilt_solution",
            json{{"text", rep.tilt_solution.render(rep.aliases)}, {"ast", to_json(rep.tilt_solution)}}},
           {"gieseker_skeletons", skels},
           {"gieseker_solution",
            json{{"text", rep.gieseker_solution.render(rep.aliases)}, {"ast", to_json(rep.gieseker_solution)}}},
           {"certified", rep.certified()},
           {"steps", steps},
           {"ordering_convention", "summed two-term coefficient for tau_-(a1) > tau_-(a2), tau_+(a1) < tau_+(a2)"}};
  return out;
}

}  // namespace wallcross
