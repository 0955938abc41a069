#include "gemcraft/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <istream>
#include <iterator>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "gemcraft/complex.hpp"
#include "gemcraft/diagram_io.hpp"
#include "gemcraft/embedding.hpp"
#include "gemcraft/heegaard.hpp"
#include "gemcraft/io.hpp"
#include "gemcraft/seifert.hpp"

namespace gemcraft {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Input {
  std::string bytes;
  std::string digest;
};

Input read_input(const std::string& path, std::istream& in) {
  Input r;
  if (path == "-") {
    r.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    r.bytes = read_file(path);
  }
  r.digest = digest(r.bytes);
  return r;
}

int thread_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GEMCRAFT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) throw UsageError("GEMCRAFT_THREADS must be a positive integer");
    n = std::min<long>(n, cap);
  }
  return n;
}

ordered header(const std::string& command, ordered config) {
  ordered j;
  j["tool"] = "gemcraft";
  j["version"] = GEMCRAFT_VERSION;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

ordered surface_json(const SurfaceType& s) {
  return ordered{{"type", s.describe()},
                 {"orientable", s.orientable},
                 {"genus", s.genus},
                 {"boundary_components", s.boundary_components},
                 {"euler_characteristic", s.euler_characteristic()}};
}

std::string colours_name(ColourSet s) {
  std::string out;
  for (Colour c = 0; c < kColours; ++c)
    if (contains(s, c)) out += std::to_string(c);
  return out;
}

ordered census_json(const ColouredGraph& g) {
  ordered pairs, hats;
  for (Colour i = 0; i < kColours; ++i)
    for (Colour j = i + 1; j < kColours; ++j)
      pairs["g" + std::to_string(i) + std::to_string(j)] = residue_count(g, colour_set({i, j}));
  for (Colour c = 0; c < kColours; ++c)
    hats["g^" + std::to_string(c)] = residue_count(g, complement(colour_set({c})));
  return ordered{{"pairs", pairs}, {"hats", hats}};
}

ordered residue_report_json(const ResidueReport& r) {
  return ordered{{"missing_colour", r.missing_colour},
                 {"colours", colours_name(r.residue.colours)},
                 {"size", r.residue.vertices.size()},
                 {"least_vertex", r.residue.vertices.empty() ? -1 : r.residue.vertices.front()},
                 {"surface", surface_json(r.surface)}};
}

ordered graph_summary(const ColouredGraph& g, const GraphClass& cls) {
  ordered j;
  if (!g.name().empty()) j["name"] = g.name();
  j["vertices"] = g.vertex_count();
  j["boundary_vertices"] = g.boundary_vertices().size();
  j["class"] = to_string(cls.tag);
  if (cls.tag == ClassTag::SingularRegular) j["singular_colour"] = cls.singular_colour;
  return j;
}

std::string render(const ordered& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  // Text: one "path: value" line per leaf.
  std::ostringstream os;
  std::function<void(const ordered&, const std::string&)> walk = [&](const ordered& v, const std::string& path) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) walk(it.value(), path.empty() ? it.key() : path + "." + it.key());
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const ordered& x) { return x.is_structured(); })) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(v[i], path + "[" + std::to_string(i) + "]");
    } else {
      os << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
  return os.str();
}

ordered complexity_json(const ComplexityReport& r) {
  ordered res;
  res["status"] = !r.found() ? "none" : (r.truncated && r.search_mode == SearchMode::Exhaustive ? "truncated" : "ok");
  res["value"] = r.value;
  res["n_singular"] = r.n_singular;
  res["best_region_size"] = r.best_region_size;
  res["search_mode"] = to_string(r.search_mode);
  res["choices_examined"] = r.choices_examined;
  res["truncated"] = r.truncated;
  return res;
}

ordered witness_json(const ComplexityReport& r) {
  return ordered{{"alpha", r.alpha},
                 {"removed_v", r.choice.removed_v},
                 {"removed_w", r.choice.removed_w},
                 {"region_face", r.region}};
}

SearchOptions search_options(std::int64_t limit, const std::string& mode, std::int64_t samples, std::uint64_t seed,
                             bool no_fallback) {
  SearchOptions o;
  o.limit = limit;
  if (mode == "exhaustive")
    o.mode = SearchMode::Exhaustive;
  else if (mode == "heuristic")
    o.mode = SearchMode::Heuristic;
  else
    throw UsageError("--mode must be exhaustive or heuristic");
  o.samples = samples;
  o.seed = seed;
  o.heuristic_fallback = !no_fallback;
  o.threads = thread_count();
  return o;
}

ordered search_config(const SearchOptions& o, int alpha) {
  ordered c;
  c["alpha"] = alpha == kNone ? ordered(nullptr) : ordered(alpha);
  c["limit"] = o.limit;
  c["mode"] = to_string(o.mode);
  c["samples"] = o.samples;
  c["seed"] = o.seed;
  c["heuristic_fallback"] = o.heuristic_fallback;
  return c;
}

CyclicPermutation parse_perm(const std::string& s) {
  std::array<Colour, 4> order{};
  std::stringstream ss(s);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 4 || item.size() != 1 || item[0] < '0' || item[0] > '3') throw UsageError("--perm expects a,b,c,d");
    order[n++] = item[0] - '0';
  }
  if (n != 4) throw UsageError("--perm expects a,b,c,d");
  std::array<Colour, 4> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Colour, 4>{0, 1, 2, 3}) throw UsageError("--perm must list each colour once");
  return CyclicPermutation(order);
}

// SVG: vertices on a circle, edges styled as in DOT.
std::string graph_svg(const ColouredGraph& g) {
  const int n = g.vertex_count();
  const double size = 640, r = 280, c = size / 2;
  const char* stroke[4] = {"#1f77b4", "#d62728", "#2ca02c", "#000000"};
  const char* dash[4] = {"", " stroke-dasharray=\"8,4\"", " stroke-dasharray=\"2,3\"", ""};
  const char* width[4] = {"1.5", "1.5", "1.5", "3"};
  auto px = [&](int v) { return c + r * std::cos(2 * std::numbers::pi * v / std::max(n, 1)); };
  auto py = [&](int v) { return c + r * std::sin(2 * std::numbers::pi * v / std::max(n, 1)); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  for (int v = 0; v < n; ++v)
    for (Colour col = 0; col < kColours; ++col) {
      int w = g.neighbour(v, col);
      if (w == kNone || w < v) continue;
      // Parallel edges are bent apart by colour.
      double mx = (px(v) + px(w)) / 2, my = (py(v) + py(w)) / 2;
      double dx = px(w) - px(v), dy = py(w) - py(v);
      double len = std::max(std::hypot(dx, dy), 1.0);
      double bend = (col - 1.5) * 14;
      os << "  <path d=\"M " << px(v) << " " << py(v) << " Q " << mx - dy / len * bend << " " << my + dx / len * bend
         << " " << px(w) << " " << py(w) << "\" fill=\"none\" stroke=\"" << stroke[col] << "\" stroke-width=\""
         << width[col] << "\"" << dash[col] << "/>\n";
    }
  for (int v = 0; v < n; ++v) {
    const bool boundary = !g.has_edge(v, 3);
    os << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"5\" fill=\"" << (boundary ? "white" : "black")
       << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << px(v) + 7 << "\" y=\"" << py(v) - 7 << "\" font-size=\"10\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string graph_dot(const ColouredGraph& g) {
  const char* style[4] = {"solid", "dashed", "dotted", "bold"};
  std::ostringstream os;
  os << "graph gem {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << (g.has_edge(v, 3) ? "" : " [shape=box]") << ";\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = g.neighbour(v, c);
      if (w == kNone || w < v) continue;
      os << "  " << v << " -- " << w << " [label=\"" << c << "\", style=" << style[c] << "];\n";
    }
  os << "}\n";
  return os.str();
}

std::string emit_graph(const ColouredGraph& g, bool text) { return text ? graph_to_text(g) : graph_to_json(g) + "\n"; }

ComplexityReport replay_witness(const ColouredGraph& g, const json& report) {
  const json& w = report.at("witness");
  Colour alpha = w.at("alpha").get<int>();
  ReductionChoice choice{w.at("removed_v").get<std::vector<int>>(), w.at("removed_w").get<std::vector<int>>()};
  std::vector<Colour> allowed = admissible_alphas(g);
  if (std::find(allowed.begin(), allowed.end(), alpha) == allowed.end())
    throw PreconditionError("witness colour " + std::to_string(alpha) + " is not admissible for this graph");
  HeegaardDiagram d = diagram_for(g, alpha);
  for (int c : choice.removed_v)
    if (c < 0 || c >= static_cast<int>(d.curves.size()) || d.curves[c].system != CurveSystem::V)
      throw ParseError("witness: removed_v lists a curve that is not a V-curve");
  for (int c : choice.removed_w)
    if (c < 0 || c >= static_cast<int>(d.curves.size()) || d.curves[c].system != CurveSystem::W)
      throw ParseError("witness: removed_w lists a curve that is not a W-curve");
  ComplexityReport r = chm_reduced(d, choice);
  r.alpha = alpha;
  return r;
}

ordered replay_report(const ColouredGraph& g, const Input& graph_in, const std::string& report_text) {
  json report;
  try {
    report = json::parse(report_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  ComplexityReport r;
  int reported = 0;
  try {
    r = replay_witness(g, report);
    reported = report.at("result").at("value").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  ordered j = header("replay", ordered::object());
  j["input_digest"] = graph_in.digest;
  if (report.contains("input_digest")) j["report_input_digest"] = report["input_digest"];
  j["reported_value"] = reported;
  j["replayed_value"] = r.value;
  j["n_singular"] = r.n_singular;
  j["best_region_size"] = r.best_region_size;
  j["region_face"] = r.region;
  j["match"] = r.value == reported;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloured graphs, Heegaard diagrams and Gem-Matveev complexity"};
  app.set_version_flag("--version", std::string(GEMCRAFT_VERSION));
  app.require_subcommand(1);

  std::string input = "-", format = "json", perm, mode = "exhaustive", replay_path, export_format, report_path;
  int alpha = kNone, colour = 0, table_max = 12;
  std::int64_t limit = 1000000, samples = 2000;
  std::uint64_t seed = 1;
  bool no_fallback = false, text_out = false;
  std::vector<int> nums;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "graph file, or - for stdin"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "classify a graph and report its residues");
  add_input(validate);
  add_format(validate);

  auto* invariants = app.add_subcommand("invariants", "complex, embeddings and genus table");
  add_input(invariants);
  add_format(invariants);
  invariants->add_option("--perm", perm, "single cyclic permutation a,b,c,d");

  auto* gm = app.add_subcommand("gm", "Gem-Matveev complexity with witness");
  add_input(gm);
  add_format(gm);
  gm->add_option("--alpha", alpha, "restrict to one colour choice");
  gm->add_option("--limit", limit, "reduction sets per diagram before falling back")->check(CLI::PositiveNumber);
  gm->add_option("--mode", mode, "exhaustive or heuristic");
  gm->add_option("--samples", samples, "heuristic samples")->check(CLI::PositiveNumber);
  gm->add_option("--seed", seed, "heuristic seed");
  gm->add_flag("--no-fallback", no_fallback, "report truncation instead of sampling");
  gm->add_option("--replay", replay_path, "re-evaluate the witness of a stored report");

  auto* gen = app.add_subcommand("gen", "generate graphs and diagrams");
  gen->require_subcommand(1);
  auto* gen_lambda = gen->add_subcommand("lambda", "graph Lambda((p,h),(q,k))");
  gen_lambda->add_option("params", nums, "p h q k")->expected(4)->required();
  gen_lambda->add_flag("--text", text_out, "cycle notation instead of JSON");
  auto* gen_torus = gen->add_subcommand("torus-knot", "torus knot complement t(p,q)");
  gen_torus->add_option("params", nums, "p q")->expected(2)->required();
  gen_torus->add_flag("--text", text_out, "cycle notation instead of JSON");
  auto* gen_diagram = gen->add_subcommand("diagram", "standard diagram H((p,h),(q,k)) as hdiag-v1");
  gen_diagram->add_option("params", nums, "p h q k")->expected(4)->required();

  auto* dbl = app.add_subcommand("double", "graph of a diagram with a planar presentation");
  add_input(dbl);
  dbl->add_flag("--text", text_out, "cycle notation instead of JSON");

  auto* desing = app.add_subcommand("desingularize", "remove the singular vertices");
  add_input(desing);
  desing->add_flag("--text", text_out, "cycle notation instead of JSON");

  auto* cap = app.add_subcommand("cap", "cap off the boundary along {i,3}-paths");
  add_input(cap);
  cap->add_option("--colour", colour, "i in {0,1,2}")->check(CLI::Range(0, 2));
  cap->add_flag("--text", text_out, "cycle notation instead of JSON");

  auto* bound = app.add_subcommand("bound", "complexity upper bound for (D2;(p,alpha),(q,beta))");
  bound->add_option("params", nums, "p alpha q beta")->expected(4)->required();

  auto* table = app.add_subcommand("table", "bound against exhaustive complexity, as TSV");
  table->add_option("--max", table_max, "largest p+q")->check(CLI::Range(4, 40));
  table->add_option("--limit", limit, "reduction sets per diagram")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "draw a graph");
  add_input(exp);
  exp->add_option("--format", export_format, "dot, json or svg")->required();

  auto* replay = app.add_subcommand("replay", "re-evaluate the witness of a gm report");
  replay->add_option("graph", input, "graph file")->required();
  replay->add_option("report", report_path, "gm report")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << GEMCRAFT_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      Input in_bytes = read_input(input, in);
      ColouredGraph g = parse_graph(in_bytes.bytes);
      GraphClass cls = classify(g);
      ordered j = header("validate", ordered{{"input", input}});
      j["input_digest"] = in_bytes.digest;
      j["graph"] = graph_summary(g, cls);
      if (cls.tag == ClassTag::Invalid) j["reason"] = cls.reason;
      j["census"] = census_json(g);
      ordered detail = ordered::array(), offending = ordered::array();
      for (const auto& r : cls.detail) detail.push_back(residue_report_json(r));
      for (const auto& r : cls.offending) offending.push_back(residue_report_json(r));
      j["residues"] = detail;
      j["offending"] = offending;
      j["bipartite"] = is_bipartite(g);
      const bool gem = cls.tag == ClassTag::ClosedGem || cls.tag == ClassTag::BoundaryGem;
      j["contracted"] = gem ? ordered(is_contracted(g)) : ordered(nullptr);
      j["boundary_components"] = g.is_connected() ? boundary_component_count(g) : 0;
      out << render(j, format);
      return cls.tag == ClassTag::Invalid ? kExitInput : kExitOk;
    }

    if (invariants->parsed()) {
      Input in_bytes = read_input(input, in);
      ColouredGraph g = parse_graph(in_bytes.bytes);
      g.validate();
      GraphClass cls = classify(g);
      ordered j = header("invariants", ordered{{"input", input}, {"perm", perm.empty() ? ordered(nullptr) : ordered(perm)}});
      j["input_digest"] = in_bytes.digest;
      j["graph"] = graph_summary(g, cls);
      Pseudocomplex k = build_complex(g);
      j["complex"] = ordered{{"vertices", k.vertex_count()},
                             {"edges", k.edge_count},
                             {"triangles", k.triangle_count},
                             {"tetrahedra", k.tetrahedron_count()},
                             {"euler_characteristic", k.euler_characteristic()},
                             {"boundary_tetrahedra", k.boundary_tetrahedra()}};
      j["census"] = census_json(g);
      std::vector<CyclicPermutation> perms =
          perm.empty() ? essential_permutations() : std::vector<CyclicPermutation>{parse_perm(perm)};
      const bool gem = cls.tag == ClassTag::ClosedGem || cls.tag == ClassTag::BoundaryGem;
      ordered table = ordered::array();
      for (const auto& eps : perms) {
        RegularEmbedding e = embed(g, eps);
        ordered row{{"eps", eps.str()},
                    {"vertices", e.map.vertex_count},
                    {"edges", e.map.edges.size()},
                    {"faces", e.map.faces.size()},
                    {"surface", surface_json(e.surface)},
                    {"regular_genus", e.regular_genus()}};
        if (gem) {
          GenusFormulaReport f = regular_genus_formula(g, eps);
          row["formula_a"] = f.variant_a;
          row["formula_b"] = f.variant_b;
        }
        table.push_back(row);
      }
      j["embeddings"] = table;
      if (cls.tag == ClassTag::BoundaryGem) {
        ordered bs = ordered::array();
        for (const auto& b : boundary_surface(g)) bs.push_back(surface_json(b.surface));
        j["boundary"] = bs;
      }
      if (cls.tag == ClassTag::SingularRegular) {
        ordered sv = ordered::array();
        for (const auto& s : singular_vertices(g))
          sv.push_back(ordered{{"label", s.label}, {"residue_size", s.residue.vertices.size()}, {"link", surface_json(s.link)}});
        j["singular_vertices"] = sv;
      }
      out << render(j, format);
      return kExitOk;
    }

    if (gm->parsed()) {
      Input in_bytes = read_input(input, in);
      ColouredGraph g = parse_graph(in_bytes.bytes);
      g.validate();
      if (!replay_path.empty()) {
        out << render(replay_report(g, in_bytes, read_file(replay_path)), format);
        return kExitOk;
      }
      SearchOptions opts = search_options(limit, mode, samples, seed, no_fallback);
      GraphClass cls = classify(g);
      ComplexityReport r;
      if (alpha == kNone) {
        r = gm_complexity(g, opts);
      } else {
        std::vector<Colour> allowed = admissible_alphas(g);
        if (std::find(allowed.begin(), allowed.end(), alpha) == allowed.end())
          throw UsageError("--alpha " + std::to_string(alpha) + " is not admissible for class " + to_string(cls.tag));
        r = chm_diagram(diagram_for(g, alpha), opts);
      }
      ordered config = search_config(opts, alpha);
      config["input"] = input;
      ordered j = header("gm", config);
      j["input_digest"] = in_bytes.digest;
      j["graph"] = graph_summary(g, cls);
      j["result"] = complexity_json(r);
      j["witness"] = witness_json(r);
      out << render(j, format);
      return kExitOk;
    }

    if (gen_lambda->parsed()) {
      LambdaParams p{nums[0], nums[1], nums[2], nums[3]};
      ColouredGraph g = lambda_graph(p);
      g.set_name("Lambda" + p.str());
      out << emit_graph(g, text_out);
      return kExitOk;
    }
    if (gen_torus->parsed()) {
      ColouredGraph g = torus_knot_graph(nums[0], nums[1]);
      g.set_name("t(" + std::to_string(nums[0]) + "," + std::to_string(nums[1]) + ")");
      out << emit_graph(g, text_out);
      return kExitOk;
    }
    if (gen_diagram->parsed()) {
      LambdaParams p{nums[0], nums[1], nums[2], nums[3]};
      RotationSpec spec = standard_rotation_spec(p);
      diagram_from_rotations(spec);
      out << rotation_spec_to_json(spec) << "\n";
      return kExitOk;
    }

    if (dbl->parsed()) {
      Input in_bytes = read_input(input, in);
      HeegaardDiagram d = diagram_from_rotations(rotation_spec_from_json(in_bytes.bytes));
      out << emit_graph(double_diagram(d), text_out);
      return kExitOk;
    }
    if (desing->parsed()) {
      Input in_bytes = read_input(input, in);
      out << emit_graph(desingularize(parse_graph(in_bytes.bytes)), text_out);
      return kExitOk;
    }
    if (cap->parsed()) {
      Input in_bytes = read_input(input, in);
      out << emit_graph(cap_off(parse_graph(in_bytes.bytes), colour), text_out);
      return kExitOk;
    }

    if (bound->parsed()) {
      SeifertParams s{nums[0], nums[1], nums[2], nums[3]};
      BoundFormulaResult b = complexity_bound(s);
      ordered j = header("bound", ordered{{"p", s.p}, {"alpha", s.alpha}, {"q", s.q}, {"beta", s.beta}});
      j["manifold"] = s.str();
      j["delta_alpha"] = b.delta_alpha;
      j["delta_beta"] = b.delta_beta;
      j["value"] = b.value;
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (table->parsed()) {
      SearchOptions opts = search_options(limit, "exhaustive", samples, seed, false);
      out << "p\th\tq\tk\talpha\tbeta\tdelta_alpha\tdelta_beta\tformula\texhaustive_gm\tmatch\n";
      for (const LambdaParams& p : lambda_tuples(table_max)) {
        SeifertParams s = seifert_of(p);
        BoundFormulaResult b = complexity_bound(s);
        ComplexityReport r = gm_complexity(lambda_graph(p), opts);
        out << p.p << "\t" << p.h << "\t" << p.q << "\t" << p.k << "\t" << s.alpha << "\t" << s.beta << "\t"
            << b.delta_alpha << "\t" << b.delta_beta << "\t" << b.value << "\t" << r.value << "\t"
            << (r.value == b.value ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (exp->parsed()) {
      if (export_format != "dot" && export_format != "json" && export_format != "svg")
        throw UsageError("unknown export format '" + export_format + "' (dot, json or svg)");
      Input in_bytes = read_input(input, in);
      ColouredGraph g = parse_graph(in_bytes.bytes);
      if (export_format == "dot") out << graph_dot(g);
      if (export_format == "json") out << graph_to_json(g) << "\n";
      if (export_format == "svg") {
        if (g.vertex_count() > 200)
          throw UsageError("SVG export is limited to 200 vertices (graph has " + std::to_string(g.vertex_count()) + ")");
        out << graph_svg(g);
      }
      return kExitOk;
    }

    if (replay->parsed()) {
      Input in_bytes = read_input(input, in);
      ColouredGraph g = parse_graph(in_bytes.bytes);
      ordered j = replay_report(g, in_bytes, read_file(report_path));
      out << j.dump(2) << "\n";
      return j["match"].get<bool>() ? kExitOk : kExitConsistency;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructureError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ConsistencyError& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitUsage;
}

}  // namespace gemcraft
