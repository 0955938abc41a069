// Acceptance run: one PASS/FAIL line per criterion.
//
//   gemcraft_acceptance [--expect-fail ID]...
//
// A sub-check listed with --expect-fail still prints FAIL but does not make
// the exit status nonzero.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gemcraft/cli.hpp"
#include "gemcraft/complex.hpp"
#include "gemcraft/embedding.hpp"
#include "gemcraft/heegaard.hpp"
#include "gemcraft/io.hpp"
#include "gemcraft/seifert.hpp"

using namespace gemcraft;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  std::string id;
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
};

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::vector<LambdaParams> all_params(int max_sum) {
  std::vector<LambdaParams> out;
  for (int s = 2; s <= max_sum; ++s)
    for (int p = 1; p < s; ++p)
      for (int h = 1; h <= p; ++h)
        for (int k = 1; k <= s - p; ++k)
          if (std::gcd(p, h) == 1 && std::gcd(s - p, k) == 1) out.push_back({p, h, s - p, k});
  return out;
}

ColouredGraph ball_gem() {
  ColouredGraph g(2);
  for (Colour c = 0; c < 3; ++c) g.add_edge(0, 1, c);
  return g;
}

ColouredGraph random_coloured(std::mt19937_64& rng, int n, bool partial_three) {
  ColouredGraph g(n);
  for (Colour c = 0; c < kColours; ++c) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    int pairs = n / 2;
    if (c == 3 && partial_three) pairs = static_cast<int>(rng() % (n / 2 + 1));
    for (int i = 0; i < pairs; ++i) g.add_edge(v[2 * i], v[2 * i + 1], c);
  }
  return g;
}

struct CorpusEntry {
  std::string name;
  ColouredGraph graph;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const char* f : {"s3.gem", "solid_torus.gem", "trefoil_complement.json"})
    out.push_back({f, parse_graph(read_file(std::string(GEMCRAFT_DATA_DIR) + "/" + f))});
  out.push_back({"s3", s3_crystallization()});
  out.push_back({"ball", ball_gem()});
  for (const LambdaParams& p : all_params(8)) out.push_back({"Lambda" + p.str(), lambda_graph(p)});
  for (const LambdaParams& p : lambda_tuples(7)) {
    ColouredGraph d = desingularize(lambda_graph(p));
    out.push_back({"desing" + p.str(), d});
    if (p.p + p.q <= 6)
      for (Colour i = 0; i < 3; ++i) out.push_back({"cap" + std::to_string(i) + p.str(), cap_off(d, i)});
  }
  std::mt19937_64 rng(20261015);
  int closed = 0, bounded = 0;
  while (closed < 40 || bounded < 20) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const bool partial = bounded < 20 && (rng() & 1);
    ColouredGraph g = random_coloured(rng, n, partial);
    ClassTag t = classify(g).tag;
    if (t == ClassTag::ClosedGem && closed < 40) {
      out.push_back({"random-closed-" + std::to_string(closed++), g});
    } else if (t == ClassTag::BoundaryGem && partial && bounded < 20) {
      out.push_back({"random-boundary-" + std::to_string(bounded++), g});
    }
  }
  return out;
}

bool is_gem(const ColouredGraph& g) {
  ClassTag t = classify(g).tag;
  return t == ClassTag::ClosedGem || t == ClassTag::BoundaryGem;
}

// ---------------------------------------------------------------------------

Criterion trefoil() {
  Criterion c{1, "trefoil complement gm = 5 - 5 = 0", {}, 0};
  auto t0 = Clock::now();
  ComplexityReport r = gm_complexity(lambda_graph({3, 2, 2, 1}));
  c.seconds = seconds_since(t0);
  std::ostringstream os;
  os << "value " << r.value << ", n " << r.n_singular << ", m " << r.best_region_size;
  c.checks.push_back({"1", r.value == 0 && r.n_singular == 5 && r.best_region_size == 5, os.str()});
  c.checks.push_back({"1t", c.seconds < 1.0, "time " + fmt_time(c.seconds) + " (limit 1 s)"});
  return c;
}

Criterion torus_knots() {
  Criterion c{2, "torus knots and small Seifert manifolds, formula and exhaustive search", {}, 0};
  struct Case {
    std::string name;
    SeifertParams s;
    int expected;
  };
  std::vector<Case> cases;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {5, 3}}) {
    SeifertParams s = seifert_of(torus_knot_params(p, q));
    cases.push_back({"t(" + std::to_string(p) + "," + std::to_string(q) + ")", s, 1});
  }
  cases.push_back({"(D2;(2,1),(2,1))", {2, 1, 2, 1}, 0});
  cases.push_back({"(D2;(3,1),(3,1))", {3, 1, 3, 1}, 0});
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (const Case& k : cases) {
    LambdaParams lp{k.s.p, mod_inverse(k.s.alpha, k.s.p), k.s.q, mod_inverse(k.s.beta, k.s.q)};
    int formula = complexity_bound(k.s).value;
    int gm = gm_complexity(lambda_graph(lp)).value;
    ok = ok && formula == k.expected && gm == k.expected && seifert_of(lp) == k.s;
    os << k.name << " " << formula << "/" << gm << "; ";
  }
  c.seconds = seconds_since(t0);
  c.checks.push_back({"2", ok, os.str() + "expected 1,1,1,0,0"});
  c.checks.push_back({"2t", c.seconds < 10.0, "time " + fmt_time(c.seconds) + " (limit 10 s)"});
  return c;
}

Criterion sweep() {
  Criterion c{3, "bound formula sweep, p+q <= 12", {}, 0};
  auto t0 = Clock::now();
  int tuples = 0, above = 0, canon_bad = 0, n_bad = 0, equal = 0;
  for (const LambdaParams& p : lambda_tuples(12)) {
    ++tuples;
    int bound = complexity_bound(seifert_of(p)).value;
    ComplexityReport ex = gm_complexity(lambda_graph(p));
    ComplexityReport canon = canonical_reduction(p);
    above += ex.value > bound || ex.truncated;
    equal += ex.value == bound;
    canon_bad += canon.value != bound;
    n_bad += canon.n_singular != p.p + p.q;
  }
  c.seconds = seconds_since(t0);
  std::ostringstream os;
  os << tuples << " tuples; gm > bound: " << above << "; canonical != bound: " << canon_bad
     << "; canonical n != p+q: " << n_bad << "; gm == bound on " << equal;
  c.checks.push_back({"3", above == 0 && canon_bad == 0 && n_bad == 0, os.str()});
  c.checks.push_back({"3t", c.seconds < 300.0, "time " + fmt_time(c.seconds) + " (limit 300 s)"});
  return c;
}

Criterion doubling() {
  Criterion c{4, "doubling of the standard diagram is Lambda, p+q <= 10", {}, 0};
  auto t0 = Clock::now();
  int tuples = 0, bad = 0;
  for (const LambdaParams& p : all_params(10)) {
    ++tuples;
    ColouredGraph dbl = double_planar(*standard_rotation_spec(p).planar);
    bad += !colour_isomorphic(dbl, lambda_graph(p)).has_value();
  }
  c.seconds = seconds_since(t0);
  c.checks.push_back({"4", bad == 0, std::to_string(tuples) + " tuples, " + std::to_string(bad) + " mismatches"});
  return c;
}

Criterion census() {
  Criterion c{5, "residue census and residue surfaces of Lambda", {}, 0};
  auto t0 = Clock::now();
  int tuples = 0, bad = 0;
  std::string first_bad;
  for (const LambdaParams& p : all_params(12)) {
    ++tuples;
    ColouredGraph g = lambda_graph(p);
    const int s = p.p + p.q;
    bool ok = pair_census(g) == std::array<int, 6>{s, 3, s, s - 1, 2, s - 1};
    for (Colour col = 0; col < kColours; ++col)
      for (const Residue& r : residues(g, complement(colour_set({col})))) {
        SurfaceType st = surface_of_residue(g, r);
        ok = ok && (col == 0 ? st == SurfaceType{true, 1, 0} : st.is_sphere());
      }
    if (!ok && first_bad.empty()) first_bad = p.str();
    bad += !ok;
  }
  c.seconds = seconds_since(t0);
  c.checks.push_back({"5", bad == 0,
                      std::to_string(tuples) + " tuples, " + std::to_string(bad) + " bad" +
                          (first_bad.empty() ? "" : " (first " + first_bad + ")")});
  return c;
}

Criterion desing() {
  Criterion c{6, "desingularization, p+q <= 8", {}, 0};
  auto t0 = Clock::now();
  int tuples = 0, cls_bad = 0, genus_bad = 0, gm_bad = 0;
  const CyclicPermutation eps(0, 1, 2, 3);
  for (const LambdaParams& p : lambda_tuples(8)) {
    ++tuples;
    ColouredGraph l = lambda_graph(p);
    ColouredGraph d = desingularize(l);
    auto bs = classify(d).tag == ClassTag::BoundaryGem ? boundary_surface(d) : std::vector<BoundaryComponent>{};
    cls_bad += !(bs.size() == 1 && bs[0].surface == SurfaceType{true, 1, 0});
    genus_bad += embed(d, eps).regular_genus() != embed(l, eps).regular_genus();
    ComplexityReport a = gm_complexity(l), b = gm_complexity(d);
    gm_bad += a.value != b.value || a.truncated || b.truncated;
  }
  c.seconds = seconds_since(t0);
  std::ostringstream os;
  os << tuples << " tuples; class/boundary bad " << cls_bad << "; genus changed " << genus_bad << "; gm differs "
     << gm_bad;
  c.checks.push_back({"6", cls_bad == 0 && genus_bad == 0 && gm_bad == 0, os.str()});
  c.checks.push_back({"6t", c.seconds < 300.0, "time " + fmt_time(c.seconds) + " (limit 300 s)"});
  return c;
}

// Embedding counts predicted from the residues of the (extended) graph.
bool euler_identity(const ColouredGraph& g, const CyclicPermutation& eps) {
  RegularEmbedding e = embed(g, eps);
  e.map.check();
  ColouredGraph x = g.boundary_vertices().empty() ? g : extended_graph(g);
  int faces = 0, arcs = 0;
  for (int i = 0; i < 4; ++i)
    for (const Residue& r : residues(x, colour_set({eps[i], eps[i + 1]}))) {
      if (r.vertices.size() < 2) continue;
      ++faces;
      arcs += !r.is_cycle;
    }
  const int v = x.vertex_count(), ed = x.edge_count() + arcs;
  return e.map.vertex_count == v && static_cast<int>(e.map.edges.size()) == ed &&
         static_cast<int>(e.map.faces.size()) == faces && v - ed + faces == e.surface.euler_characteristic() &&
         e.surface.orientable == is_bipartite(g);
}

// Brute-force colour-preserving isomorphism test over all bijections.
bool brute_isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      for (Colour c = 0; c < kColours && ok; ++c) {
        int w = a.neighbour(v, c);
        int bw = b.neighbour(perm[v], c);
        ok = (w == kNone) ? bw == kNone : bw == perm[w];
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool valid_isomorphism(const ColouredGraph& a, const ColouredGraph& b, const Isomorphism& iso) {
  for (int v = 0; v < a.vertex_count(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = a.neighbour(v, c);
      int bw = b.neighbour(iso.map[v], iso.colour_map[c]);
      if ((w == kNone) != (bw == kNone)) return false;
      if (w != kNone && bw != iso.map[w]) return false;
    }
  return true;
}

Criterion properties() {
  Criterion c{7, "property suites", {}, 0};
  auto t0 = Clock::now();
  std::vector<CorpusEntry> graphs = corpus();

  // (a)
  {
    int total = 0, bad = 0;
    for (const auto& e : graphs)
      for (const auto& eps : essential_permutations()) {
        ++total;
        bad += !euler_identity(e.graph, eps);
      }
    c.checks.push_back({"7a", bad == 0,
                        "Euler identity on " + std::to_string(total) + " embeddings of " +
                            std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " bad"});
  }

  // (b)
  {
    int gems = 0, a_bad = 0, b_bad = 0, b_bad_closed = 0, refused = 0, singular = 0;
    std::string example;
    for (const auto& e : graphs) {
      if (is_gem(e.graph)) {
        ++gems;
        bool fa = false, fb = false;
        for (const auto& eps : essential_permutations()) {
          GenusFormulaReport r = regular_genus_formula(e.graph, eps);
          fa = fa || r.variant_a != r.chi_genus;
          if (r.variant_b != r.chi_genus) {
            fb = true;
            if (example.empty())
              example = e.name + " " + eps.str() + ": chi-genus " + std::to_string(r.chi_genus) + ", second form " +
                        std::to_string(r.variant_b);
          }
        }
        a_bad += fa;
        b_bad += fb;
        b_bad_closed += fb && classify(e.graph).tag == ClassTag::ClosedGem;
      } else if (classify(e.graph).tag == ClassTag::SingularRegular) {
        ++singular;
        try {
          regular_genus_formula(e.graph, CyclicPermutation(0, 1, 2, 3));
        } catch (const PreconditionError&) {
          ++refused;
        }
      }
    }
    std::ostringstream os;
    os << gems << " gems: first form wrong on " << a_bad << ", second form wrong on " << b_bad << " (" << b_bad_closed
       << " closed)";
    if (!example.empty()) os << ", e.g. " << example;
    os << "; refused on " << refused << "/" << singular << " singular graphs";
    c.checks.push_back({"7b", a_bad == 0 && b_bad == 0 && refused == singular, os.str()});
  }

  // (c) and (d)
  {
    std::int64_t sets = 0;
    int size_bad = 0, diagrams = 0, compared = 0, below = 0;
    for (const auto& e : graphs) {
      if (e.graph.vertex_count() > 120) continue;
      GraphClass cls = classify(e.graph);
      if (cls.tag == ClassTag::Invalid || (cls.tag == ClassTag::SingularRegular && cls.singular_colour != 0)) continue;
      for (Colour alpha : admissible_alphas(e.graph)) {
        HeegaardDiagram d = diagram_for(e.graph, alpha);
        ++diagrams;
        for (CurveSystem s : {CurveSystem::V, CurveSystem::W}) {
          CutDualGraph g = cut_dual(d, d.system_curves(s));
          const int expected = expected_tree_size(d, g);
          reduction_sets(g, 20000, [&](const std::vector<int>& set) {
            ++sets;
            size_bad += static_cast<int>(set.size()) != expected;
          });
        }
        SearchOptions ex;
        ex.heuristic_fallback = false;
        ComplexityReport exhaustive = chm_diagram(d, ex);
        if (exhaustive.truncated || !exhaustive.found()) continue;
        SearchOptions h;
        h.mode = SearchMode::Heuristic;
        h.samples = 64;
        h.seed = 7 + alpha;
        ComplexityReport heur = chm_diagram(d, h);
        ++compared;
        below += heur.found() && heur.value < exhaustive.value;
      }
    }
    c.checks.push_back({"7c", size_bad == 0,
                        std::to_string(sets) + " reduction sets on " + std::to_string(diagrams) + " diagrams, " +
                            std::to_string(size_bad) + " of the wrong size"});
    c.checks.push_back({"7d", below == 0,
                        std::to_string(compared) + " diagrams, heuristic below exhaustive on " +
                            std::to_string(below)});
  }

  // (e)
  {
    std::mt19937_64 rng(99);
    int trials = 0, bad = 0;
    while (trials < 1000) {
      const int n = 2 * (1 + static_cast<int>(rng() % 3));
      ColouredGraph a = random_coloured(rng, n, false);
      if (!a.is_connected()) continue;
      ++trials;
      ColouredGraph b;
      if (rng() & 1) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        b = permute_vertices(a, perm);
      } else {
        do b = random_coloured(rng, n, false);
        while (!b.is_connected());
      }
      const bool truth = brute_isomorphic(a, b);
      auto found = colour_isomorphic(a, b);
      bool ok = found.has_value() == truth;
      if (found) ok = ok && valid_isomorphism(a, b, *found);
      if (truth) ok = ok && residue_census(a) == residue_census(b);
      bad += !ok;
    }
    c.checks.push_back({"7e", bad == 0,
                        std::to_string(trials) + " random regular colourings, " + std::to_string(bad) + " bad"});
  }
  c.seconds = seconds_since(t0);
  return c;
}

std::string cli(const std::vector<std::string>& args, const std::string& stdin_text, int& code) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  code = run_cli(args, in, out, err);
  return out.str();
}

Criterion determinism() {
  Criterion c{8, "byte-identical reports on repeated runs", {}, 0};
  auto t0 = Clock::now();
  const std::string lambda = graph_to_json(lambda_graph({5, 2, 2, 1}));
  const std::string desing = graph_to_json(desingularize(lambda_graph({4, 1, 3, 1})));
  std::vector<std::pair<std::vector<std::string>, std::string>> runs = {
      {{"gm", "-"}, lambda},
      {{"gm", "-", "--mode", "heuristic", "--seed", "7", "--samples", "300"}, lambda},
      {{"gm", "-", "--limit", "5", "--seed", "3"}, desing},
      {{"invariants", "-"}, desing},
      {{"validate", "-"}, lambda},
      {{"table", "--max", "8"}, ""},
  };
  int bad = 0;
  for (const auto& [args, input] : runs) {
    int c1 = 0, c2 = 0;
    std::string a = cli(args, input, c1), b = cli(args, input, c2);
    bad += a != b || c1 != 0 || c2 != 0 || a.empty();
  }
  c.seconds = seconds_since(t0);
  c.checks.push_back({"8", bad == 0,
                      std::to_string(runs.size()) + " commands run twice, " + std::to_string(bad) + " differ or fail"});
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected_fail.insert(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--expect-fail ID]...\n";
      return 1;
    }
  }

  std::vector<std::function<Criterion()>> runs = {trefoil, torus_knots, sweep, doubling,
                                                  census,  desing,    properties, determinism};
  int unexpected = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), "(aborted)", {}, 0};
    try {
      c = runs[i]();
    } catch (const std::exception& e) {
      c.checks.push_back({std::to_string(i + 1), false, std::string("exception: ") + e.what()});
    }
    const bool ok = std::all_of(c.checks.begin(), c.checks.end(), [](const Check& k) { return k.ok; });
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << " [" << fmt_time(c.seconds)
              << "]\n";
    for (const Check& k : c.checks) {
      const bool tolerated = !k.ok && expected_fail.count(k.id);
      std::cout << "        " << k.id << " " << (k.ok ? "ok  " : (tolerated ? "FAIL (expected)" : "FAIL")) << "  "
                << k.detail << "\n";
      unexpected += !k.ok && !tolerated;
    }
  }
  std::cout << (unexpected == 0 ? "acceptance: no unexpected failures\n" : "acceptance: unexpected failures\n");
  return unexpected == 0 ? 0 : 1;
}
