#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace wallcross::cli {

const std::vector<std::string> kCommands = {"bg-check", "walls", "safe-area", "js-setup", "reduce", "plot",
                                            "oracle-diff"};

namespace {

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorCode::ConfigError, what) {}
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

PlanePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("a point is [b, w]");
  return PlanePoint{rational_from_json(j[0]), rational_from_json(j[1])};
}

std::int64_t positive_int(const json& j, const char* key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    throw ConfigError(std::string(key) + " must be a positive integer");
  }
  return j.get<std::int64_t>();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Precondition, "cannot write " + path);
  out << text;
}

void write_json(const RunOptions& opt, const json& j) {
  if (opt.out_path) write_file(*opt.out_path, j.dump(2) + "\n");
}

std::string types_text(const std::set<WallType>& types) {
  std::string out;
  for (WallType t : types) out += (out.empty() ? "" : ",") + std::string(wall_type_name(t));
  return out.empty() ? "-" : out;
}

std::int64_t require_n(const RunConfig& cfg) {
  if (!cfg.n) throw ConfigError("this command needs n");
  return *cfg.n;
}

const Region& require_region(const RunConfig& cfg) {
  if (!cfg.region) throw ConfigError("this command needs region");
  return *cfg.region;
}

// The class whose walls are computed: v_n when n is given, else the class.
NumClass wall_target(const RunConfig& cfg) {
  return cfg.n ? make_vn(cfg.cls, *cfg.n, cfg.context) : cfg.cls;
}

void print_walls(std::ostream& out, const NumClass& target, const std::vector<Wall>& walls) {
  out << "target " << target.str() << "\n";
  out << "walls " << walls.size() << "\n";
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Wall& w = walls[i];
    auto t = w.line.triple();
    out << "[" << i + 1 << "] " << w.line.equation() << " | line (" << to_string(t[0]) << "," << to_string(t[1])
        << "," << to_string(t[2]) << ") | witness (" << w.witness.b << ", " << w.witness.w << ") | types "
        << types_text(w.classification) << "\n";
    for (const Decomposition& d : w.decompositions) {
      out << "    " << d.first.str() << " + " << d.second.str() << " | " << types_text(d.types) << "\n";
    }
  }
}

int cmd_bg_check(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  BgLinear k = bg_linear_coeffs(cfg.cls, ctx);
  out << "class " << cfg.cls.str() << "\n";
  json j{{"class", to_json(cfg.cls)},
         {"coefficients", json{{"w", to_json(k.coeff_w)}, {"b", to_json(k.coeff_b)}, {"constant", to_json(k.constant)}}}};
  if (k.is_zero()) {
    out << "B identically zero\n";
  } else {
    out << "B = 2*(" << k.coeff_w << "*w + " << k.coeff_b << "*b + " << k.constant << ")\n";
  }
  json pts = json::array();
  for (const PlanePoint& p : cfg.points) {
    Rational value = bg_form(cfg.cls, p.b, p.w, ctx);
    out << "B(" << p.b << ", " << p.w << ") = " << value << (value.sign() >= 0 ? "  (>= 0)" : "  (< 0)") << "\n";
    pts.push_back(json{{"b", p.b.str()}, {"w", p.w.str()}, {"value", value.str()}});
  }
  j["points"] = pts;
  write_json(opt, j);
  return kOk;
}

int cmd_walls(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  NumClass target = wall_target(cfg);
  auto walls = enumerate_walls(target, require_region(cfg), ctx, EngineOptions{opt.threads});
  if (cfg.n) {
    for (Wall& w : walls) classify_wall(target, cfg.cls, *cfg.n, w, ctx, cfg.bounds);
  }
  print_walls(out, target, walls);
  write_json(opt, json{{"context", to_json(ctx)}, {"target", to_json(target)}, {"walls", walls_to_json(walls)}});
  return kOk;
}

int cmd_safe_area(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  SafeArea area = safe_line(cfg.cls, ctx);
  out << "class " << cfg.cls.str() << "\n";
  out << "safe line: " << area.equation() << "\n";
  json j{{"class", to_json(cfg.cls)}, {"equation", area.equation()}, {"degenerate", area.degenerate}};
  if (!area.degenerate) {
    out << "a_v = " << area.a_v << "\n";
    out << "b_v = " << area.b_v << "\n";
    j["a_v"] = area.a_v.str();
    j["b_v"] = area.b_v.str();
  }
  json pts = json::array();
  for (const PlanePoint& p : cfg.points) {
    bool in = in_safe_area(area, cfg.cls, p.b, p.w, ctx);
    out << "(" << p.b << ", " << p.w << ") " << (in ? "in" : "not in") << " the safe area\n";
    pts.push_back(json{{"b", p.b.str()}, {"w", p.w.str()}, {"inside", in}});
  }
  j["points"] = pts;
  write_json(opt, j);
  return kOk;
}

int cmd_js_setup(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  std::int64_t n = require_n(cfg);
  NumClass vn = make_vn(cfg.cls, n, ctx);
  WallLine lf = ell_f(vn, ctx);
  WallLine ljs = ell_js(cfg.cls, n, ctx);
  VnBounds vb = cfg.bounds ? *cfg.bounds : trivial_bounds(cfg.cls);
  out << "v " << cfg.cls.str() << "\n";
  out << "v_n " << vn.str() << "\n";
  out << "ell_f: " << lf.equation() << "\n";
  out << "ell_JS: " << ljs.equation() << "\n";
  json j{{"v", to_json(cfg.cls)}, {"v_n", to_json(vn)}, {"ell_f", lf.equation()}, {"ell_js", ljs.equation()}};
  try {
    std::int64_t s = suggest_n(cfg.cls, vb, ctx);
    out << "suggested n: " << s << "\n";
    j["suggested_n"] = s;
  } catch (const Error& e) {
    out << "suggested n: none (" << e.what() << ")\n";
    j["suggested_n"] = nullptr;
  }
  write_json(opt, j);
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  ReductionOptions ro;
  ro.region = cfg.region;
  ro.bounds = cfg.bounds;
  ro.threads = opt.threads;
  ro.require_certificate = cfg.require_certificate;
  ro.certificate.mesh = cfg.mesh;
  ReductionReport rep = rank_reduce(cfg.cls, require_n(cfg), cfg.context, ro);
  out << rep.formula() << "\n";
  out << rep.solution.render(rep.aliases) << "\n";
  out << rep.gieseker_solution.render(rep.aliases) << "\n";
  out << "v = " << rep.v.str() << ", v_n = " << rep.vn.str() << "\n";
  out << rep.log();
  write_json(opt, to_json(rep));
  return kOk;
}

int cmd_plot(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  Scene scene;
  if (cfg.viewport) {
    scene.viewport = *cfg.viewport;
  } else if (cfg.region) {
    scene.viewport = Viewport{cfg.region->b_lo, cfg.region->b_hi, cfg.region->w_lo, cfg.region->w_hi};
  } else {
    throw ConfigError("plot needs viewport or region");
  }
  NumClass target = wall_target(cfg);
  if (cfg.n) {
    std::int64_t n = *cfg.n;
    try {
      scene.lines.push_back({ell_f(target, ctx), "l_f"});
    } catch (const Error&) {
    }
    scene.lines.push_back({ell_js(cfg.cls, n, ctx), "l_JS"});
    if (target.r != 0) scene.points.push_back({pi_point(target, ctx), "Pi(v_n)"});
    scene.points.push_back({PlanePoint{Rational(-n), Rational(n * n, 2)}, "Pi(O(-n))"});
  } else if (cfg.cls.r != 0) {
    scene.points.push_back({pi_point(cfg.cls, ctx), "Pi(v)"});
  }
  if (cfg.region) {
    auto walls = enumerate_walls(target, *cfg.region, ctx, EngineOptions{opt.threads});
    for (std::size_t i = 0; i < walls.size(); ++i) {
      bool dup = false;
      for (const auto& l : scene.lines) dup = dup || l.line == walls[i].line;
      if (!dup) scene.lines.push_back({walls[i].line, "wall " + std::to_string(i + 1)});
    }
  }
  std::string svg = render_svg(scene);
  if (opt.svg_path) {
    write_file(*opt.svg_path, svg);
    out << "wrote " << scene.lines.size() << " lines and " << scene.points.size() << " points\n";
  } else {
    out << svg;
  }
  return kOk;
}

LatticeBox enlarge(const LatticeBox& box, std::int64_t margin, const CY3Context& ctx) {
  auto grow = [&](const Interval& iv, std::int64_t d) {
    Rational m = Rational(margin) / Rational(d);
    return Interval{iv.lo - m, iv.hi + m};
  };
  return LatticeBox{grow(box.r, 1), grow(box.c1, ctx.lattice[0]), grow(box.c2, ctx.lattice[1]),
                    grow(box.c3, ctx.lattice[2])};
}

Interval interval_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(std::string("oracle_box.") + name + " must be [lo, hi]");
  Interval iv{rational_from_json(j[0]), rational_from_json(j[1])};
  if (iv.hi < iv.lo) throw ConfigError(std::string("oracle_box.") + name + " is empty");
  return iv;
}

LatticeBox box_from_json(const json& j) {
  if (!j.is_object() || j.size() != 4) throw ConfigError("oracle_box needs exactly the keys r, c1, c2, c3");
  for (const char* k : {"r", "c1", "c2", "c3"}) {
    if (!j.contains(k)) throw ConfigError(std::string("oracle_box is missing ") + k);
  }
  return LatticeBox{interval_from_json(j["r"], "r"), interval_from_json(j["c1"], "c1"),
                    interval_from_json(j["c2"], "c2"), interval_from_json(j["c3"], "c3")};
}

int cmd_oracle_diff(const RunConfig& cfg, const RunOptions& opt, std::ostream& out) {
  const CY3Context& ctx = cfg.context;
  NumClass target = wall_target(cfg);
  const Region& region = require_region(cfg);
  auto engine = enumerate_walls(target, region, ctx, EngineOptions{opt.threads});
  LatticeBox box = cfg.oracle_box ? *cfg.oracle_box : enlarge(search_box(target, region, ctx), cfg.oracle_margin, ctx);
  Integer volume = box.count(ctx);
  if (volume > 100000000) throw Error(ErrorCode::Precondition, "oracle box too large: " + to_string(volume));
  auto oracle = brute_force_walls(target, region, box, ctx);
  bool same = engine == oracle;
  out << "target " << target.str() << "\n";
  out << "box points " << to_string(volume) << "\n";
  out << "engine walls " << engine.size() << ", oracle walls " << oracle.size() << "\n";
  out << (same ? "MATCH" : "MISMATCH") << "\n";
  write_json(opt, json{{"target", to_json(target)},
                       {"match", same},
                       {"engine", walls_to_json(engine)},
                       {"oracle", walls_to_json(oracle)}});
  return same ? kOk : kOracleMismatch;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_context = false, have_class = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string raw = trim(t.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " + key);
    json value;
    try {
      value = json::parse(raw);
    } catch (const json::exception& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": value of " + key + " is not JSON");
    }
    try {
      if (key == "context") {
        if (value.is_string() && value.get<std::string>() == "quintic") {
          cfg.context = quintic_context();
        } else {
          cfg.context = context_from_json(value);
        }
        have_context = true;
      } else if (key == "class") {
        cfg.cls = class_from_json(value);
        have_class = true;
      } else if (key == "n") {
        cfg.n = positive_int(value, "n");
      } else if (key == "region") {
        cfg.region = region_from_json(value);
      } else if (key == "bounds") {
        cfg.bounds = bounds_from_json(value);
      } else if (key == "point") {
        cfg.points.push_back(point_from_json(value));
      } else if (key == "points") {
        if (!value.is_array()) throw ConfigError("points must be a list");
        for (const auto& p : value) cfg.points.push_back(point_from_json(p));
      } else if (key == "viewport") {
        Region r = region_from_json(value);
        cfg.viewport = Viewport{r.b_lo, r.b_hi, r.w_lo, r.w_hi};
      } else if (key == "require_certificate") {
        if (!value.is_boolean()) throw ConfigError("require_certificate must be a boolean");
        cfg.require_certificate = value.get<bool>();
      } else if (key == "mesh") {
        cfg.mesh = static_cast<unsigned>(positive_int(value, "mesh"));
      } else if (key == "oracle_margin") {
        if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
          throw ConfigError("oracle_margin must be a non-negative integer");
        }
        cfg.oracle_margin = value.get<std::int64_t>();
      } else if (key == "oracle_box") {
        cfg.oracle_box = box_from_json(value);
      } else {
        throw ConfigError("unknown key " + key);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const json::exception& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_context) throw ConfigError("missing key context");
  if (!have_class) throw ConfigError("missing key class");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int run(const std::string& command, const RunConfig& config, const RunOptions& options, std::ostream& out,
        std::ostream& err) {
  try {
    if (command == "bg-check") return cmd_bg_check(config, options, out);
    if (command == "walls") return cmd_walls(config, options, out);
    if (command == "safe-area") return cmd_safe_area(config, options, out);
    if (command == "js-setup") return cmd_js_setup(config, options, out);
    if (command == "reduce") return cmd_reduce(config, options, out);
    if (command == "plot") return cmd_plot(config, options, out);
    if (command == "oracle-diff") return cmd_oracle_diff(config, options, out);
    err << "unknown command " << command << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ConfigError) return kConfigError;
    if (e.code() == ErrorCode::CertificateFailed) return kCertificateFailure;
    return kPreconditionError;
  }
}

}  // namespace wallcross::cli
