// Command-line surface for the even-2-complex wallspace library:
// generate | check | walls | distance | pwt | render.
//
// Exit codes: 0 = pass, 1 = domain failure (failed check, bound violation,
// identity mismatch), 2 = usage or input error. Set E2W_LOG=1 for progress
// lines on stderr. JSON reports follow docs/report.schema.json.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "e2w/complex.hpp"
#include "e2w/errors.hpp"
#include "e2w/generators.hpp"
#include "e2w/homology.hpp"
#include "e2w/io.hpp"
#include "e2w/link.hpp"
#include "e2w/pwt.hpp"
#include "e2w/walls.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

bool log_enabled() {
  const char* v = std::getenv("E2W_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void logline(const std::string& msg) {
  if (log_enabled()) std::cerr << "[e2w] " << msg << "\n";
}

class Timer {
 public:
  long long ms() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

nlohmann::json envelope(const std::string& command, const std::string& digest,
                        long long ms) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["input_digest"] = digest;
  j["timing_ms"] = ms;
  j["sections"] = {{"validation", nlohmann::json::object()},
                   {"link_condition", nlohmann::json::object()},
                   {"walls", nlohmann::json::object()},
                   {"pwt", nlohmann::json::object()}};
  return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  os << text;
  e2w::require(bool(os), e2w::ErrorCode::ParseError,
               "cannot write " + out_path);
}

std::string shapes_string(const std::set<int>& shapes) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int s : shapes) {
    if (!first) os << ",";
    os << s;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string summary_line(const e2w::EvenComplex& X) {
  std::ostringstream os;
  os << (X.name.empty() ? "(anonymous)" : X.name) << ": V=" << X.vertex_count
     << " E=" << X.edge_count() << " F=" << X.face_count()
     << " shapes=" << shapes_string(e2w::shapes(X))
     << " digest=" << e2w::digest(X);
  return os.str();
}

e2w::WeightScheme parse_scheme(const std::string& s) {
  if (s == "original") return e2w::WeightScheme::Original;
  if (s == "truncated") return e2w::WeightScheme::Truncated;
  if (s == "largetype") return e2w::WeightScheme::LargeType;
  e2w::fail(e2w::ErrorCode::ParseError, "unknown scheme: " + s);
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string preset;
  int k = 0, gon = 0, gon2 = 0;
  int radius = 0;
  bool grow = false;
  std::uint64_t seed = 1;
  std::vector<int> palette = {4, 6, 8};
  int target = 40;
  std::string name;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  e2w::EvenComplex X;
  if (!a.preset.empty()) {
    X = e2w::make_preset(a.preset, a.radius);
  } else if (a.grow) {
    e2w::GrowthSpec spec;
    spec.seed = a.seed;
    spec.palette = a.palette;
    spec.target_faces = a.target;
    logline("growing " + std::to_string(a.target) + " faces from seed " +
            std::to_string(a.seed));
    X = e2w::grow_random(spec);
  } else if (a.k > 0 || a.gon > 0) {
    e2w::require(a.k > 0 && a.gon > 0, e2w::ErrorCode::ParseError,
                 "--k and --gon must be given together");
    int radius = a.radius > 0 ? a.radius : 3;
    e2w::TilingSpec spec =
        a.gon2 > 0 ? e2w::TilingSpec::alternating(a.k, a.gon, a.gon2, radius)
                   : e2w::TilingSpec::uniform(a.k, a.gon, radius);
    X = e2w::tiling_ball(spec);
  } else {
    e2w::fail(e2w::ErrorCode::ParseError,
              "one of --preset, --k/--gon, or --grow is required");
  }
  if (!a.name.empty()) X.name = a.name;

  if (a.out.empty()) {
    std::cerr << summary_line(X) << "\n";
    std::cout << e2w::to_json_string(X);
  } else {
    e2w::save_complex(X, a.out);
    std::cout << summary_line(X) << "\n";
    logline("wrote " + a.out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

nlohmann::json validation_section(const e2w::EvenComplex& X,
                                  const e2w::HomologyReport& hom) {
  nlohmann::json v;
  v["name"] = X.name;
  v["vertices"] = X.vertex_count;
  v["edges"] = X.edge_count();
  v["faces"] = X.face_count();
  std::set<int> sh = e2w::shapes(X);
  v["shapes"] = std::vector<int>(sh.begin(), sh.end());
  v["homology"] = {{"connected", hom.connected},
                   {"euler", hom.euler},
                   {"betti1", hom.betti1},
                   {"torsion", hom.torsion},
                   {"pass", hom.pass()}};
  return v;
}

nlohmann::json link_section(const std::string& scheme,
                            const e2w::LinkConditionReport& rep) {
  nlohmann::json l;
  l["scheme"] = scheme;
  l["pass"] = rep.pass;
  l["vertices_checked"] = rep.vertices_checked;
  nlohmann::json fails = nlohmann::json::array();
  for (const e2w::VertexLinkReport& f : rep.failures)
    fails.push_back({{"vertex", f.vertex},
                     {"simplicial", f.simplicial},
                     {"girth", f.girth ? e2w::pi_string(*f.girth)
                                       : std::string("none")}});
  l["failures"] = fails;
  return l;
}

int cmd_check(const std::string& file, const std::string& scheme_name,
              bool json, const std::string& out) {
  Timer t;
  e2w::EvenComplex X = e2w::load_complex(file);
  e2w::WeightScheme scheme = parse_scheme(scheme_name);
  logline("loaded " + summary_line(X));
  e2w::LinkConditionReport link = e2w::check_link_condition(X, scheme);
  e2w::HomologyReport hom = e2w::homology_proxy_check(X);
  bool pass = link.pass && hom.pass();

  if (json) {
    nlohmann::json j = envelope("check", e2w::digest(X), t.ms());
    j["sections"]["validation"] = validation_section(X, hom);
    j["sections"]["link_condition"] = link_section(scheme_name, link);
    j["pass"] = pass;
    emit(j, out);
  } else {
    std::cout << summary_line(X) << "\n";
    std::cout << "link condition [" << scheme_name << "]: "
              << (link.pass ? "pass" : "FAIL") << " (" << link.vertices_checked
              << " vertices";
    if (!link.failures.empty())
      std::cout << ", " << link.failures.size() << " failing";
    std::cout << ")\n";
    for (const e2w::VertexLinkReport& f : link.failures)
      std::cout << "  vertex " << f.vertex << ": "
                << (f.simplicial ? "simplicial" : "not simplicial")
                << ", girth "
                << (f.girth ? e2w::pi_string(*f.girth) : std::string("none"))
                << "\n";
    std::cout << "homology: " << (hom.connected ? "connected" : "DISCONNECTED")
              << ", euler=" << hom.euler << ", betti1=" << hom.betti1
              << (hom.torsion.empty() ? "" : ", torsion present") << " -> "
              << (hom.pass() ? "pass" : "FAIL") << "\n";
    std::cout << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// walls

nlohmann::json walls_section(const e2w::WallSet& ws) {
  nlohmann::json w;
  w["wall_count"] = ws.wall_count;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < ws.wall_count; ++i) {
    const e2w::Wall& wall = ws.walls[i];
    rows.push_back({{"id", i},
                    {"dual_edges", wall.dual_edges.size()},
                    {"carrier_faces", wall.carrier_faces.size()},
                    {"tree_depth", wall.tree_depth},
                    {"embedded", wall.embedded},
                    {"two_sided", wall.two_sided}});
  }
  w["walls"] = rows;
  return w;
}

int cmd_walls(const std::string& file, bool json, const std::string& out) {
  Timer t;
  e2w::EvenComplex X = e2w::load_complex(file);
  e2w::WallSet ws = e2w::build_walls(X);
  logline("built " + std::to_string(ws.wall_count) + " walls in " +
          std::to_string(t.ms()) + " ms");
  if (json) {
    nlohmann::json j = envelope("walls", e2w::digest(X), t.ms());
    j["sections"]["walls"] = walls_section(ws);
    emit(j, out);
  } else {
    std::cout << summary_line(X) << "\n";
    std::cout << "walls: " << ws.wall_count << "\n";
    for (int i = 0; i < ws.wall_count; ++i) {
      const e2w::Wall& w = ws.walls[i];
      std::cout << "  wall " << i << ": dual_edges=" << w.dual_edges.size()
                << " carrier_faces=" << w.carrier_faces.size()
                << " tree_depth=" << w.tree_depth << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// distance

int cmd_distance(const std::string& file, int v, int w, bool json,
                 const std::string& out) {
  Timer t;
  e2w::EvenComplex X = e2w::load_complex(file);
  e2w::require(v >= 0 && v < X.vertex_count && w >= 0 && w < X.vertex_count,
               e2w::ErrorCode::ParseError, "vertex id out of range");
  e2w::WallSet ws = e2w::build_walls(X);
  int d = e2w::d1(X, v, w);
  std::vector<int> sep = ws.separating_walls(v, w);
  bool identity = d == static_cast<int>(sep.size());

  if (json) {
    nlohmann::json j = envelope("distance", e2w::digest(X), t.ms());
    j["distance"] = {{"v", v},
                     {"w", w},
                     {"d1", d},
                     {"separating_walls", sep},
                     {"identity_holds", identity}};
    emit(j, out);
  } else {
    std::cout << "d1(" << v << ", " << w << ") = " << d << "\n";
    std::cout << "separating walls (" << sep.size() << "):";
    for (int s : sep) std::cout << " " << s;
    std::cout << "\n";
    std::cout << "identity d1 == separating-wall count: "
              << (identity ? "yes" : "NO") << "\n";
  }
  return identity ? 0 : 1;
}

// ---------------------------------------------------------------------------
// pwt

int cmd_pwt(const std::string& file, bool json, int parallel, bool large_type,
            const std::string& out) {
  Timer t;
  e2w::EvenComplex X = e2w::load_complex(file);
  logline("loaded " + summary_line(X));
  e2w::WallSet ws = e2w::build_walls(X);
  logline("built " + std::to_string(ws.wall_count) + " walls in " +
          std::to_string(t.ms()) + " ms");
  e2w::PWTOptions opts;
  opts.large_type = large_type;
  opts.threads = std::max(1, parallel);
  e2w::PWTReport rep = e2w::verify_pwt(X, ws, opts);
  logline("verified " + std::to_string(ws.wall_count) + " walls in " +
          std::to_string(t.ms()) + " ms total");

  if (json) {
    nlohmann::json j = envelope("pwt", e2w::digest(X), t.ms());
    j["sections"]["walls"] = walls_section(ws);
    j["sections"]["pwt"] = nlohmann::json::parse(e2w::pwt_report_json(X, rep));
    j["pass"] = rep.pass();
    emit(j, out);
  } else {
    std::cout << summary_line(X) << "\n";
    std::cout << "bound K = " << rep.bound.str() << " ("
              << (rep.large_type ? "squareless large-type" : "general")
              << ", shapes " << shapes_string(rep.shape_set) << ")\n";
    e2w::HalfDist max_radius = rep.max_radius();
    int arg = -1, witness = -1;
    bool geodesic_all = true;
    for (const e2w::PWTWallRow& row : rep.walls) {
      if (arg < 0 || row.radius > rep.walls[arg].radius) {
        arg = row.wall;
        witness = row.witness;
      }
      geodesic_all = geodesic_all && row.separated_by_geodesic_scan;
    }
    std::cout << "walls: " << ws.wall_count
              << "; max separation radius = " << max_radius.str();
    if (arg >= 0) std::cout << " (wall " << arg << ", witness " << witness << ")";
    std::cout << "\n";
    std::cout << "far vertices all separated along their geodesics: "
              << (geodesic_all ? "yes" : "no (fallback scan used)") << "\n";
    if (rep.violations.empty()) {
      std::cout << "violations: none\n";
    } else {
      std::cout << "violations: " << rep.violations.size() << "\n";
      for (const e2w::PWTViolation& q : rep.violations)
        std::cout << "  wall " << q.wall << ", vertex " << q.vertex
                  << ", d1 = " << q.distance.str() << "\n";
    }
  }
  return rep.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// render

/// Planar layout: boundary cycle pinned to a circle, interior vertices
/// relaxed to the average of their neighbors (a Tutte embedding computed by
/// Gauss-Seidel). Best-effort for non-disc inputs.
std::vector<std::array<double, 2>> layout(const e2w::EvenComplex& X) {
  std::vector<std::vector<int>> boundary_at(X.vertex_count);
  for (int e = 0; e < X.edge_count(); ++e)
    if (X.edge_faces[e].size() == 1) {
      boundary_at[X.edges[e][0]].push_back(e);
      boundary_at[X.edges[e][1]].push_back(e);
    }
  std::vector<int> cycle;
  int start = -1;
  for (int v = 0; v < X.vertex_count && start < 0; ++v)
    if (boundary_at[v].size() == 2) start = v;
  if (start >= 0) {
    int cur = start, in_edge = -1;
    std::vector<char> seen(X.vertex_count, 0);
    while (!seen[cur] && boundary_at[cur].size() == 2) {
      seen[cur] = 1;
      cycle.push_back(cur);
      int e = boundary_at[cur][boundary_at[cur][0] == in_edge ? 1 : 0];
      in_edge = e;
      cur = X.edge_other(e, cur);
    }
    if (cur != start) cycle.clear();  // boundary walk failed; fall back
  }
  if (cycle.empty())
    for (int v = 0; v < X.vertex_count; ++v) cycle.push_back(v);

  std::vector<std::array<double, 2>> pos(X.vertex_count, {0.0, 0.0});
  std::vector<char> pinned(X.vertex_count, 0);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    double a = 2.0 * pi * static_cast<double>(i) / cycle.size() - pi / 2;
    pos[cycle[i]] = {std::cos(a), std::sin(a)};
    pinned[cycle[i]] = 1;
  }
  for (int iter = 0; iter < 20000; ++iter) {
    double moved = 0;
    for (int v = 0; v < X.vertex_count; ++v) {
      if (pinned[v] || X.vertex_edges[v].empty()) continue;
      double sx = 0, sy = 0;
      for (int e : X.vertex_edges[v]) {
        int u = X.edge_other(e, v);
        sx += pos[u][0];
        sy += pos[u][1];
      }
      double nx = sx / X.vertex_edges[v].size();
      double ny = sy / X.vertex_edges[v].size();
      moved = std::max(moved, std::abs(nx - pos[v][0]) +
                                  std::abs(ny - pos[v][1]));
      pos[v] = {nx, ny};
    }
    if (moved < 1e-10) break;
  }
  return pos;
}

int cmd_render(const std::string& file, std::optional<int> wall,
               const std::string& out) {
  e2w::EvenComplex X = e2w::load_complex(file);
  e2w::WallSet ws = e2w::build_walls(X);
  if (wall)
    e2w::require(*wall >= 0 && *wall < ws.wall_count, e2w::ErrorCode::ParseError,
                 "wall id out of range: " + std::to_string(*wall) + " (have " +
                     std::to_string(ws.wall_count) + ")");
  std::vector<std::array<double, 2>> pos = layout(X);

  auto sx = [&](double x) { return 550.0 + 500.0 * x; };
  auto sy = [&](double y) { return 550.0 - 500.0 * y; };
  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1100 1100\">\n"
      << "<rect width=\"1100\" height=\"1100\" fill=\"#ffffff\"/>\n";

  std::vector<char> carrier_face(X.face_count(), 0);
  if (wall)
    for (int f : ws.walls[*wall].carrier_faces) carrier_face[f] = 1;
  for (int f = 0; f < X.face_count(); ++f) {
    svg << "<polygon points=\"";
    for (int v : X.faces[f])
      svg << sx(pos[v][0]) << "," << sy(pos[v][1]) << " ";
    svg << "\" fill=\"" << (carrier_face[f] ? "#fde8e8" : "#f5f2ea")
        << "\" stroke=\"#9a9a9a\" stroke-width=\"1.2\"/>\n";
  }

  if (wall) {
    const e2w::Wall& W = ws.walls[*wall];
    for (int e : W.dual_edges) {
      auto [a, b] = X.edges[e];
      svg << "<line class=\"dual\" x1=\"" << sx(pos[a][0]) << "\" y1=\""
          << sy(pos[a][1]) << "\" x2=\"" << sx(pos[b][0]) << "\" y2=\""
          << sy(pos[b][1])
          << "\" stroke=\"#d62728\" stroke-width=\"2.5\" "
             "stroke-dasharray=\"6 4\"/>\n";
    }
    for (const e2w::Mirror& m : W.mirrors) {
      const std::vector<int>& cyc = X.faces[m.face];
      int n = static_cast<int>(cyc.size());
      auto mid = [&](int p) {
        int u = cyc[p], v = cyc[(p + 1) % n];
        return std::array<double, 2>{(pos[u][0] + pos[v][0]) / 2,
                                     (pos[u][1] + pos[v][1]) / 2};
      };
      std::array<double, 2> a = mid(m.pos_a), b = mid(m.pos_b);
      svg << "<line class=\"mirror\" x1=\"" << sx(a[0]) << "\" y1=\""
          << sy(a[1]) << "\" x2=\"" << sx(b[0]) << "\" y2=\"" << sy(b[1])
          << "\" stroke=\"#d62728\" stroke-width=\"5\" "
             "stroke-linecap=\"round\" opacity=\"0.85\"/>\n";
    }
  }

  for (int v = 0; v < X.vertex_count; ++v) {
    const char* fill = "#707070";
    if (wall) fill = ws.side(*wall, v) ? "#ff7f0e" : "#1f77b4";
    svg << "<circle cx=\"" << sx(pos[v][0]) << "\" cy=\"" << sy(pos[v][1])
        << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
  }
  svg << "</svg>\n";

  std::ofstream os(out);
  os << svg.str();
  e2w::require(bool(os), e2w::ErrorCode::ParseError, "cannot write " + out);
  logline("wrote " + out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"even 2-complex wallspace toolkit"};
  app.set_version_flag("--version", std::string("e2w ") + kVersion);
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "build a complex");
  g->add_option("--preset", gen.preset, "preset name (see data/presets.json)");
  g->add_option("--k", gen.k, "faces per interior vertex");
  g->add_option("--gon", gen.gon, "face side count");
  g->add_option("--gon2", gen.gon2, "alternating second side count");
  g->add_option("--radius", gen.radius, "ball radius in layers");
  g->add_flag("--grow", gen.grow, "random disc growth instead of a tiling");
  g->add_option("--seed", gen.seed, "growth seed");
  g->add_option("--palette", gen.palette, "growth side counts (e.g. 4,6,8)")
      ->delimiter(',');
  g->add_option("--target", gen.target, "growth face count");
  g->add_option("--name", gen.name, "name stored in the file");
  g->add_option("--out", gen.out, "output file (stdout if omitted)");

  std::string check_file, check_scheme = "truncated", check_out;
  bool check_json = false;
  CLI::App* c = app.add_subcommand("check", "validate + link condition + homology");
  c->add_option("file", check_file, "complex file")->required();
  c->add_option("--scheme", check_scheme,
                "original | truncated | largetype (default truncated)");
  c->add_flag("--json", check_json, "machine-readable report");
  c->add_option("--out", check_out, "write the report to a file");

  std::string walls_file, walls_out;
  bool walls_json = false;
  CLI::App* w = app.add_subcommand("walls", "wall summary");
  w->add_option("file", walls_file, "complex file")->required();
  w->add_flag("--json", walls_json, "machine-readable report");
  w->add_option("--out", walls_out, "write the report to a file");

  std::string dist_file, dist_out;
  int dist_v = 0, dist_w = 0;
  bool dist_json = false;
  CLI::App* d = app.add_subcommand(
      "distance", "combinatorial distance and separating walls");
  d->add_option("file", dist_file, "complex file")->required();
  d->add_option("v", dist_v, "first vertex id")->required();
  d->add_option("w", dist_w, "second vertex id")->required();
  d->add_flag("--json", dist_json, "machine-readable report");
  d->add_option("--out", dist_out, "write the report to a file");

  std::string pwt_file, pwt_out;
  bool pwt_json = false, pwt_large = false;
  int pwt_parallel = 1;
  CLI::App* p = app.add_subcommand("pwt", "verify the parallel-wall bound");
  p->add_option("file", pwt_file, "complex file")->required();
  p->add_flag("--json", pwt_json, "machine-readable report");
  p->add_option("--parallel", pwt_parallel, "worker threads (timing only)");
  p->add_flag("--large-type", pwt_large,
              "use the sharper squareless bound and weights");
  p->add_option("--out", pwt_out, "write the report to a file");

  std::string render_file, render_out;
  int render_wall = -1;
  CLI::App* r = app.add_subcommand("render", "SVG drawing");
  r->add_option("file", render_file, "complex file")->required();
  r->add_option("--wall", render_wall, "wall id to highlight");
  r->add_option("--out", render_out, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(g)) return cmd_generate(gen);
    if (app.got_subcommand(c))
      return cmd_check(check_file, check_scheme, check_json, check_out);
    if (app.got_subcommand(w)) return cmd_walls(walls_file, walls_json, walls_out);
    if (app.got_subcommand(d))
      return cmd_distance(dist_file, dist_v, dist_w, dist_json, dist_out);
    if (app.got_subcommand(p))
      return cmd_pwt(pwt_file, pwt_json, pwt_parallel, pwt_large, pwt_out);
    if (app.got_subcommand(r))
      return cmd_render(render_file,
                        render_wall >= 0 ? std::optional<int>(render_wall)
                                         : std::nullopt,
                        render_out);
  } catch (const e2w::Error& e) {
    std::cerr << "error [" << e2w::to_string(e.code()) << "]: " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
