#include "ffam/analysis/report.hpp"
#include "ffam/dynamics/df.hpp"
#include "ffam/dynamics/exact_orbit.hpp"
#include "ffam/dynamics/kernels.hpp"
#include "ffam/dynamics/web.hpp"
#include "ffam/exactfield/embed.hpp"
#include "ffam/exactfield/minpoly.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/render/svg.hpp"
#include "ffam/stargeom/constants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ffam;

namespace {

enum Exit { Ok = 0, VerifyFail = 1, Usage = 2, Numeric = 3, Io = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned precision = 128;   // bits for decimal renderings
  double tolerance = 1e-9;
  int levels = 5;
  int workers = 1;
  std::string output_dir = ".";
  std::string format = "json";
  long long seed = 0;

  void validate() const {
    if (precision < 53 || precision > 65536) throw UsageError("precision must be in [53, 65536] bits");
    if (!(tolerance > 0 && tolerance < 1)) throw UsageError("tolerance must be in (0, 1)");
    if (levels < 1 || levels > 200) throw UsageError("levels must be in [1, 200]");
    if (workers < 1 || workers > 256) throw UsageError("workers must be in [1, 256]");
    if (format != "svg" && format != "json" && format != "csv") throw UsageError("format must be svg, json or csv");
  }
  json meta(const std::string& command) const {
    return {{"command", command},   {"precision_bits", precision}, {"tolerance", tolerance},
            {"levels", levels},     {"workers", workers},          {"output_dir", output_dir},
            {"format", format},     {"seed", seed},                {"isa", simd::isa_name(simd::detected_isa())}};
  }
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(no) + ": expected key = value");
    std::string v = trim(line.substr(eq + 1));
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
    kv[trim(line.substr(0, eq))] = v;
  }
  return kv;
}

template <class T>
T parse_value(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  T out;
  if (!(is >> out) || !(is >> std::ws).eof()) throw UsageError("config: bad value for " + key + ": '" + v + "'");
  return out;
}

void check_n(int N, int lo = 3) {
  if (N < lo) throw UsageError("N must be >= " + std::to_string(lo) + ", got " + std::to_string(N));
}

fs::path out_path(const Config& c, const std::string& p) {
  fs::path f(p);
  return f.is_absolute() ? f : fs::path(c.output_dir) / f;
}

void write_file(const Config& c, const std::string& p, const std::string& text) {
  fs::path f = out_path(c, p);
  std::error_code ec;
  if (f.has_parent_path()) fs::create_directories(f.parent_path(), ec);
  std::ofstream o(f, std::ios::binary);
  if (!o) throw IoError("cannot write '" + f.string() + "'");
  o << text;
  if (!o.flush()) throw IoError("write failed for '" + f.string() + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dec(const RealElement& e, const Config& c, int digits = 20) {
  return embed_decimal(e.element(), digits, c.precision);
}

// "2/14" -> 2 pi/14
double parse_theta(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return std::stod(s) * M_PI;
    double a = std::stod(s.substr(0, slash)), b = std::stod(s.substr(slash + 1));
    if (b == 0) throw UsageError("theta denominator is zero");
    return a / b * M_PI;
  } catch (const std::logic_error&) {
    throw UsageError("theta must be a fraction of pi such as 2/14, got '" + s + "'");
  }
}

Vec2 parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("point must be x,y");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("point must be x,y, got '" + s + "'");
  }
}

json poly_json(const PolyQ& p) {
  json c = json::array(), ints = json::array();
  for (const auto& q : p.coeffs()) c.push_back(to_string(q));
  for (const auto& z : p.integer_form()) ints.push_back(z.get_str());
  return {{"monic", p.str()}, {"coefficients", c}, {"integer_coefficients", ints}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First Family construction, outer billiards webs and exact scale arithmetic"};
  app.require_subcommand(1);
  Config cfg;
  std::string config_file;
  app.add_option("--config", config_file, "key = value file; flags override it");
  auto* o_prec = app.add_option("--precision", cfg.precision, "bits for decimal renderings");
  auto* o_tol = app.add_option("--tolerance", cfg.tolerance, "float orbit return tolerance");
  auto* o_work = app.add_option("--workers", cfg.workers, "threads for web generation");
  auto* o_dir = app.add_option("--output-dir", cfg.output_dir, "directory for relative output paths");
  auto* o_fmt = app.add_option("--format", cfg.format, "segment export format: svg|json|csv");
  auto* o_seed = app.add_option("--seed", cfg.seed, "recorded in metadata; used by sampling checks");

  int N = 0, K = 0, P = 0, Q = 0;

  auto* c_family = app.add_subcommand("family", "First Family tiles as JSON, optional SVG");
  bool case_info = false;
  std::string svg_out, json_out;
  c_family->add_option("N", N)->required();
  c_family->add_flag("--case-info", case_info, "add case, field and alignment details");
  c_family->add_option("--svg", svg_out, "write SVG");
  c_family->add_option("--json", json_out, "write JSON to a file instead of stdout");

  auto* c_star = app.add_subcommand("star", "star points and scale table");
  c_star->add_option("N", N)->required();
  c_star->add_option("--svg", svg_out, "write SVG");

  auto* c_starpoly = app.add_subcommand("starpoly", "star polygon {p,q} vertex circuits");
  c_starpoly->add_option("p", P)->required();
  c_starpoly->add_option("q", Q)->required();
  c_starpoly->add_option("--svg", svg_out, "write SVG");

  auto* c_web = app.add_subcommand("web", "local or Df singularity web");
  bool use_df = false;
  std::string theta_s, seg_out;
  c_web->add_option("N", N)->required();
  auto* o_levels = c_web->add_option("--levels", cfg.levels, "web depth");
  c_web->add_flag("--df", use_df, "Digital Filter web in its torus frame");
  c_web->add_option("--theta", theta_s, "angle as a fraction of pi, default 2/N");
  c_web->add_option("--out", seg_out, "segment export (format from --format)");
  c_web->add_option("--svg", svg_out, "write SVG");

  auto* c_orbit = app.add_subcommand("orbit", "tau orbit of a point");
  std::string point_s;
  long max_iter = 100000;
  bool exact = false;
  c_orbit->add_option("N", N)->required();
  c_orbit->add_option("--point", point_s, "x,y")->required();
  c_orbit->add_option("--max", max_iter, "iteration cap");
  c_orbit->add_flag("--exact", exact, "exact tau (the point is rounded to a rational first)");

  auto* c_dec = app.add_subcommand("decompose", "s_k over the primitive star points");
  c_dec->add_option("N", N)->required();
  c_dec->add_option("k", K)->required();

  auto* c_min = app.add_subcommand("minpoly", "minimal polynomial of tan(k pi/N) or cos(2 k pi/N)");
  std::string kind;
  K = 1;
  c_min->add_option("kind", kind)->required()->check(CLI::IsMember({"tan", "cos"}));
  c_min->add_option("N", N)->required();
  c_min->add_option("k", K);

  auto* c_exp = app.add_subcommand("express", "target as a polynomial in a generator");
  std::string target = "scale:1", generator = "genscale";
  c_exp->add_option("N", N)->required();
  c_exp->add_option("--target", target, "scale:k | tan:k");
  c_exp->add_option("--generator", generator, "genscale | tan2")->check(CLI::IsMember({"genscale", "tan2"}));

  auto* c_dim = app.add_subcommand("dimension", "fractal dimension from scaling factors");
  double g = 0, t = 0;
  std::string preset;
  auto* o_g = c_dim->add_option("--geometric", g, "geometric scale in (0,1)");
  auto* o_t = c_dim->add_option("--temporal", t, "temporal scale > 1");
  auto* o_p = c_dim->add_option("--preset", preset)->check(CLI::IsMember({"n8", "n12", "n5", "goetz5"}));
  o_p->excludes(o_g)->excludes(o_t);

  auto* c_ver = app.add_subcommand("verify", "exact analysis suites");
  std::string suite;
  int max_n = 30;
  c_ver->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"all", "scaling", "symmetry", "independence", "complexity"}));
  c_ver->add_option("--max-n", max_n, "largest N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    if (!config_file.empty()) {
      for (const auto& [k, v] : read_config(config_file)) {
        if (k == "precision") {
          if (!o_prec->count()) cfg.precision = parse_value<unsigned>(k, v);
        } else if (k == "tolerance") {
          if (!o_tol->count()) cfg.tolerance = parse_value<double>(k, v);
        } else if (k == "levels") {
          if (!o_levels->count()) cfg.levels = parse_value<int>(k, v);
        } else if (k == "workers") {
          if (!o_work->count()) cfg.workers = parse_value<int>(k, v);
        } else if (k == "output_dir") {
          if (!o_dir->count()) cfg.output_dir = v;
        } else if (k == "format") {
          if (!o_fmt->count()) cfg.format = v;
        } else if (k == "seed") {
          if (!o_seed->count()) cfg.seed = parse_value<long long>(k, v);
        } else {
          throw UsageError("config: unknown key '" + k + "'");
        }
      }
    }
    cfg.validate();
    const std::string cmd = app.get_subcommands().front()->get_name();
    json out{{"meta", cfg.meta(cmd)}};

    if (cmd == "family") {
      check_n(N);
      Family f = first_family(N);
      json fj = family_json(f);
      if (case_info) {
        json info{{"case", to_string(f.kind)}, {"field", family_field(N)}, {"gen_scale", dec(gen_scale(N), cfg)}};
        if (N % 4 == 2 && N >= 6) {
          auto al = twice_odd_alignment(N);
          json m = json::array();
          for (const auto& a : al.matches)
            m.push_back({{"source", a.source},
                         {"target", a.target ? json(*a.target) : json(nullptr)},
                         {"center_error", a.center_error}});
          info["alignment"] = {{"all_matched", al.all_matched()}, {"matches", m}};
        }
        fj["case_info"] = info;
      }
      out["family"] = fj;
      if (!svg_out.empty()) write_file(cfg, svg_out, render_family(f));
      if (!json_out.empty())
        write_file(cfg, json_out, out.dump(2) + "\n");
      else
        emit(out);
    } else if (cmd == "star") {
      check_n(N);
      auto tab = scale_table(N);
      json pts = json::array();
      for (const auto& sp : star_points(N))
        pts.push_back({{"k", sp.k},
                       {"point", {sp.point.x, sp.point.y}},
                       {"primitive", sp.primitive},
                       {"s", dec(sp.s, cfg)},
                       {"scale", dec(tab->scale[sp.k], cfg)},
                       {"dual_scale", dec(tab->dual_scale[sp.k], cfg)}});
      out["N"] = N;
      out["star_points"] = pts;
      out["gen_scale"] = dec(tab->gen_scale, cfg);
      out["gen_star"] = {gen_star(N).x, gen_star(N).y};
      emit(out);
      if (!svg_out.empty()) write_file(cfg, svg_out, to_svg(star_points_scene(N)));
    } else if (cmd == "starpoly") {
      if (P < 3 || Q < 1 || 2 * Q >= P) throw UsageError("starpoly needs p >= 3 and 1 <= q < p/2");
      auto sp = star_polygon(P, Q);
      json circ = json::array();
      for (const auto& c : sp.circuits) {
        json v = json::array();
        for (auto p : c) v.push_back({p.x, p.y});
        circ.push_back(v);
      }
      out["p"] = P;
      out["q"] = Q;
      out["circuits"] = circ;
      emit(out);
      if (!svg_out.empty()) write_file(cfg, svg_out, to_svg(star_polygon_scene(sp)));
    } else if (cmd == "web") {
      check_n(N);
      if (!use_df && !theta_s.empty()) throw UsageError("--theta applies only with --df");
      Web w = use_df ? df_web(theta_s.empty() ? 2 * M_PI / N : parse_theta(theta_s), cfg.levels, cfg.workers)
                     : local_web(N, cfg.levels, cfg.workers);
      out["web"] = {{"kind", w.meta.kind},
                    {"levels", w.meta.levels},
                    {"theta", w.meta.theta},
                    {"segments", w.segments.size()},
                    {"rectification", w.meta.rectification},
                    {"interleave", w.meta.interleave}};
      if (!seg_out.empty()) {
        if (cfg.format == "csv")
          write_file(cfg, seg_out, w.to_csv());
        else if (cfg.format == "svg")
          write_file(cfg, seg_out, use_df ? to_svg(df_scene(w)) : render_web(w));
        else
          write_file(cfg, seg_out, w.to_jsonl());
      }
      if (!svg_out.empty()) write_file(cfg, svg_out, use_df ? to_svg(df_scene(w)) : render_web(w));
      emit(out);
    } else if (cmd == "orbit") {
      check_n(N);
      if (max_iter < 1) throw UsageError("--max must be positive");
      Vec2 p = parse_point(point_s);
      json res;
      if (exact) {
        ExactOuterBilliards eob(N);
        auto q = [&](double v) {
          return RealElement::rational(eob.field(), Rational(v));
        };
        auto r = exact_orbit({q(p.x), q(p.y)}, eob, max_iter);
        res = {{"period", r.period ? json(*r.period) : json(nullptr)}, {"signature", r.signature}, {"exact", true}};
      } else {
        auto ob = OuterBilliards::standard(N);
        auto r = orbit(p, ob, max_iter, cfg.tolerance, true);
        json pts = json::array();
        for (auto v : r.points) pts.push_back({v.x, v.y});
        res = {{"period", r.period ? json(*r.period) : json(nullptr)},
               {"signature", r.signature},
               {"points", pts},
               {"exact", false}};
      }
      res["N"] = N;
      res["start"] = {p.x, p.y};
      out["orbit"] = res;
      emit(out);
    } else if (cmd == "decompose") {
      check_n(N);
      if (K < 1 || K > half_n(N)) throw UsageError("k must be in [1, <N/2>]");
      auto d = decompose_in_primitive_basis(N, K);
      json idx = json::array(), co = json::array();
      std::string line;
      for (const auto& [j, c] : d) {
        idx.push_back(j);
        co.push_back(to_string(c));
        line += (line.empty() ? "" : ", ") + to_string(c);
      }
      out["N"] = N;
      out["k"] = K;
      out["indices"] = idx;
      out["coefficients"] = co;
      out["text"] = line;
      emit(out);
    } else if (cmd == "minpoly") {
      check_n(N);
      if (K < 1) throw UsageError("k must be positive");
      if (kind == "tan" && (2 * K) % (2 * N) == N) throw UsageError("tan(k pi/N) is undefined for this k");
      RealElement e = kind == "tan" ? tan_pi(N, K) : cos_2pi(N, K);
      out["value"] = dec(e, cfg);
      out["minpoly"] = poly_json(minimal_polynomial(e.element()));
      emit(out);
    } else if (cmd == "express") {
      check_n(N);
      auto colon = target.find(':');
      if (colon == std::string::npos) throw UsageError("--target must be scale:k or tan:k");
      std::string tk = target.substr(0, colon);
      int k = 0;
      try {
        k = std::stoi(target.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw UsageError("--target index is not an integer");
      }
      if (k < 1 || k > half_n(N)) throw UsageError("target index must be in [1, <N/2>]");
      RealElement te;
      if (tk == "scale")
        te = scale(N, k);
      else if (tk == "tan")
        te = tan_pi(N, k);
      else
        throw UsageError("--target kind must be scale or tan");
      RealElement gen = generator == "genscale" ? gen_scale(N) : tan_pi(N, 1) * tan_pi(N, 1);
      out["target"] = target;
      out["generator"] = generator;
      out["coefficients"] = poly_json(express_in_generator(te, gen))["coefficients"];
      emit(out);
    } else if (cmd == "dimension") {
      DimensionReport d;
      if (!preset.empty())
        d = dimension_preset(preset);
      else if (o_g->count() && o_t->count())
        d = fractal_dimension(g, t);
      else
        throw UsageError("dimension needs --preset or both --geometric and --temporal");
      out["dimension"] = to_json(d);
      emit(out);
    } else if (cmd == "verify") {
      if (max_n < 3 || max_n > 200) throw UsageError("--max-n must be in [3, 200]");
      Report r = verify_suite(suite, max_n);
      out["report"] = to_json(r);
      emit(out);
      if (!r.all_pass()) {
        const auto* f = r.first_failure();
        std::cerr << "verification failed: " << f->id << " (" << f->anchor << "): " << f->lhs << " != " << f->rhs
                  << "\n";
        return VerifyFail;
      }
    }
    return Ok;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return Io;
  } catch (const TauError& e) {
    std::cerr << "singularity: " << e.what() << "\n";
    return Numeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return Numeric;
  }
}
