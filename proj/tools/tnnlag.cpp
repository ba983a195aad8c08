#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tnnlag/cells.hpp"
#include "tnnlag/error.hpp"
#include "tnnlag/lagrange.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/plabic.hpp"

using nlohmann::json;
using namespace tnnlag;

namespace {

constexpr int kOk = 0, kGuard = 2, kDomain = 3, kParse = 4, kViolation = 5;

// Inline JSON, a file path, or "-" for stdin.
json read_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

// A permutation given as JSON {"k","m","window"} or a bare window array.
AffinePerm read_perm(const std::string& arg) {
  json j = read_json(arg);
  if (j.is_array()) {
    auto w = j.get<std::vector<int>>();
    const int m = static_cast<int>(w.size());
    long s = 0;
    for (int i = 0; i < m; ++i) s += w[static_cast<std::size_t>(i)] - (i + 1);
    if (m == 0 || s % m != 0) throw Error(ErrorKind::SumMismatch, "window sum is not a multiple of m");
    return validate(w, static_cast<int>(s / m), m);
  }
  return perm_from_json(j);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out);
  f << text;
}

json steps_json(const std::vector<ConstructionStep>& steps) {
  json a = json::array();
  for (const auto& s : steps) {
    const char* kind = s.kind == ConstructionStep::base ? "base" : s.kind == ConstructionStep::sym_lollipop ? "sym_lollipop" : "sym_bridge";
    a.push_back({{"kind", kind}, {"i", s.i}, {"n", s.n}, {"perm", to_json(s.perm)}});
  }
  return a;
}

// ---- verification suites ----

struct Report {
  json violations = json::array();
  long checks = 0;
  void check(bool ok, const std::string& what, json input) {
    ++checks;
    if (!ok) violations.push_back({{"check", what}, {"input", std::move(input)}});
  }
};

void suite_bruhat(int n, Report& r) {
  auto nodes = enumerate(n, 2 * n, true);
  for (const auto& f : nodes)
    for (const auto& g : nodes) {
      bool leq = bruhat_leq(f, g);
      auto Mf = matroid_of(f), Mg = matroid_of(g);
      bool contained = std::includes(Mg.begin(), Mg.end(), Mf.begin(), Mf.end());
      r.check(leq == contained, "bruhat_leq matches matroid containment", {to_json(f), to_json(g)});
      if (leq && f != g) r.check(symmdim(f) < symmdim(g), "symmdim strictly increases", {to_json(f), to_json(g)});
    }
  if (n <= 2)
    for (int k = 0; k <= 2 * n; ++k)
      for (const auto& f : enumerate(k, 2 * n, false))
        for (const auto& g : covers(f)) r.check(bruhat_leq(f, g) && dim(g) == dim(f) + 1, "cover raises dim by one", {to_json(f), to_json(g)});
}

void suite_necklace(int n, Report& r) {
  for (int k = 0; k <= 2 * n; ++k)
    for (const auto& f : enumerate(k, 2 * n, false)) {
      auto N = necklace_of(f);
      r.check(f_from_necklace(N) == f, "I_min round trip", to_json(f));
      r.check(f_from_max_necklace(N) == f, "I_max round trip", to_json(f));
    }
}

void suite_bridges(int n, std::uint64_t seed, Report& r) {
  for (const auto& f : enumerate(n, 2 * n, true)) {
    Construction C = bridge_construction(f);
    auto w = random_weights(seed, bridge_step_count(C.steps));
    GrassmannPoint X = point_from_steps(C.steps, w);
    r.check(f_of_point(X) == f, "constructed point lies in its cell", to_json(f));
    r.check(boundary_measurement(replay_network(C.steps, w)) == X, "matching and matrix routes agree", to_json(f));
    for (int i : beta_descents(f)) {
      AffinePerm t = twist(f, i);
      if (!is_rho_symmetric(t) || symmdim(t) + 1 != symmdim(f)) continue;
      GrassmannPoint Xt = random_sym_point(t, seed);
      Rational a(3, 2);
      auto res = remove_sym_bridge(add_sym_bridge_point(Xt, i, a), i, t);
      r.check(res.rational && res.c == QuadraticNumber(a) && res.X == Xt, "symmetric bridge removal round trip",
              {{"f", to_json(t)}, {"i", i}});
    }
  }
}

void suite_lagrangian(int n, std::uint64_t seed, Report& r) {
  for (const auto& f : enumerate(n, 2 * n, true)) {
    GrassmannPoint X = random_sym_point(f, seed);
    r.check(is_in_lgrnn(X), "symmetric point is TNN Lagrangian", to_json(f));
    r.check(is_rho_symmetric_point(X), "symmetric point is T-fixed", to_json(f));
  }
  for (const auto& f : enumerate(n, 2 * n, false)) {
    GrassmannPoint X = random_point(f, seed);
    bool iso = is_isotropic(X), sym = has_plucker_symmetry(X), fixed = is_rho_symmetric_point(X);
    r.check(iso == sym && sym == fixed, "isotropy, Plücker symmetry and T-invariance agree", to_json(f));
    if (iso) r.check(is_rho_symmetric(f_of_point(X)), "Lagrangian points have symmetric permutations", to_json(f));
  }
  for (int m = 1; m <= n; ++m) r.check(cyclic_shift_identity(m), "(S + S^T) R = -R (S + S^T)", m);
}

void suite_poset(int n, Report& r) {
  CellPoset P = build_poset(n);
  auto chains = longest_chain_from_bottom(P);
  for (std::size_t v = 0; v < P.nodes.size(); ++v)
    r.check(chains[v] == P.ranks[v], "rank equals longest chain from the bottom", to_json(P.nodes[v]));
  for (std::size_t v = 0; v < P.nodes.size(); ++v) {
    if (P.ranks[v] == 0) continue;
    auto gd = going_down(P.nodes[v]);
    if (gd.kind != GoingDown::predecessor) continue;
    bool found = false;
    for (int u : P.lower_covers(static_cast<int>(v)))
      if (P.nodes[static_cast<std::size_t>(u)] == *gd.pred) found = true;
    r.check(found, "going-down step is a lower cover", to_json(P.nodes[v]));
  }
}

void suite_faces(int n, Report& r) {
  for (const auto& f : enumerate(n, 2 * n, true)) {
    Construction C = bridge_construction(f);
    bool map_ok = true;
    try {
      check_map(C.graph);
    } catch (const Error&) {
      map_ok = false;
    }
    r.check(map_ok, "constructed graph is a valid disk map", to_json(f));
    r.check(faces(C.graph) == minimal_symmetric_faces(f), "face count matches the minimal formula", to_json(f));
    r.check(faces(C.graph) >= 2 * symmdim(f), "face lower bound 2 symmdim", to_json(f));
    r.check(is_rho_symmetric_graph(C.graph), "constructed graph is symmetric", to_json(f));
  }
}

json run_suite(const std::string& name, int n, std::uint64_t seed, int& code) {
  static const std::vector<std::string> all = {"bruhat", "necklace", "bridges", "lagrangian", "poset", "faces"};
  std::vector<std::string> names = name == "all" ? all : std::vector<std::string>{name};
  json out = json::object();
  code = kOk;
  for (const auto& s : names) {
    Report r;
    if (s == "bruhat") suite_bruhat(n, r);
    else if (s == "necklace") suite_necklace(n, r);
    else if (s == "bridges") suite_bridges(n, seed, r);
    else if (s == "lagrangian") suite_lagrangian(n, seed, r);
    else if (s == "poset") suite_poset(n, r);
    else if (s == "faces") suite_faces(n, r);
    else throw Error(ErrorKind::ParseError, "unknown suite " + s);
    if (!r.violations.empty()) code = kViolation;
    out[s] = {{"checks", r.checks}, {"violations", r.violations}};
  }
  return out;
}

std::vector<std::pair<MoveKind, MoveSite>> all_sites(const PlabicGraph& G) {
  std::vector<std::pair<MoveKind, MoveSite>> out;
  for (MoveKind k : {MoveKind::square, MoveKind::contract_expand, MoveKind::parallel_reduce, MoveKind::degree2_remove,
                     MoveKind::double_square, MoveKind::double_m2})
    for (const auto& s : move_sites(G, k)) out.push_back({k, s});
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Totally nonnegative Grassmannian and Lagrangian Grassmannian toolkit"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 1;
  app.add_option("--out", out_path, "write the artifact to a file instead of stdout");
  app.add_option("--seed", seed, "seed for sampled weights");

  int k = 0, m = 0;
  bool rho_only = false;
  std::string format = "table";
  auto* en = app.add_subcommand("enumerate", "list bounded affine permutations of B(k, m)");
  en->add_option("k", k)->required();
  en->add_option("m", m)->required();
  en->add_flag("--rho-symmetric", rho_only);
  en->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  std::string input, emit_kind = "graph";
  auto* co = app.add_subcommand("construct", "symmetric bridge construction for a permutation");
  co->add_option("perm", input, "permutation JSON, window array, file or -")->required();
  co->add_option("--emit", emit_kind)->check(CLI::IsMember({"graph", "steps", "svg", "dot", "network"}));

  auto* me = app.add_subcommand("measure", "boundary measurement of a network");
  me->add_option("network", input)->required();

  auto* ch = app.add_subcommand("check", "Lagrangian and positivity checks for a point");
  ch->add_option("point", input)->required();

  int n = 2;
  bool dot = false;
  auto* po = app.add_subcommand("poset", "cell poset of the TNN Lagrangian Grassmannian");
  po->add_option("n", n)->required();
  po->add_flag("--dot", dot);

  std::string suite;
  auto* ve = app.add_subcommand("verify", "run a property suite");
  ve->add_option("suite", suite)->required()->check(
      CLI::IsMember({"bruhat", "necklace", "bridges", "lagrangian", "poset", "faces", "all"}));
  ve->add_option("--n", n);

  std::string render_format = "svg";
  auto* re = app.add_subcommand("render", "draw a graph or network");
  re->add_option("graph", input)->required();
  re->add_option("--format", render_format)->check(CLI::IsMember({"svg", "dot"}));

  auto* ne = app.add_subcommand("neighbors", "experimental: graphs one move away");
  bool symmetric_only = false;
  ne->add_option("graph", input)->required();
  ne->add_flag("--symmetric", symmetric_only, "keep only symmetric results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (*en) {
    auto perms = enumerate(k, m, rho_only);
    std::map<int, int> hist;
    if (rho_only)
      for (const auto& f : perms) ++hist[symmdim(f)];
    if (format == "json") {
      json a = json::array();
      for (const auto& f : perms) a.push_back(to_json(f));
      json j = {{"count", perms.size()}, {"perms", a}};
      if (rho_only) {
        json h = json::object();
        for (auto [d, c] : hist) h[std::to_string(d)] = c;
        j["symmdim_histogram"] = h;
      }
      emit(j.dump(2), out_path);
    } else {
      std::ostringstream s;
      for (const auto& f : perms) {
        s << f.str() << "  k=" << f.k() << " dim=" << dim(f);
        if (rho_only) s << " symmdim=" << symmdim(f);
        s << '\n';
      }
      if (rho_only) {
        s << "histogram";
        for (auto [d, c] : hist) s << ' ' << d << ':' << c;
        s << '\n';
      }
      s << perms.size() << " permutations\n";
      emit(s.str(), out_path);
    }
    return kOk;
  }

  if (*co) {
    AffinePerm f = read_perm(input);
    Construction C = bridge_construction(f);
    if (emit_kind == "graph") emit(to_json(C.graph).dump(2), out_path);
    else if (emit_kind == "steps") emit(steps_json(C.steps).dump(2), out_path);
    else if (emit_kind == "svg") emit(to_svg(C.graph), out_path);
    else if (emit_kind == "dot") emit(to_dot(C.graph), out_path);
    else emit(to_json(replay_network(C.steps, random_weights(seed, bridge_step_count(C.steps)))).dump(2), out_path);
    std::cerr << "faces " << faces(C.graph) << ", minimal " << minimal_symmetric_faces(f) << ", hash "
              << graph_hash(C.graph) << '\n';
    return kOk;
  }

  if (*me) {
    PlabicNetwork N = network_from_json(read_json(input));
    Plucker P = normalized(measurement_plucker(N));
    GrassmannPoint X = point_from_plucker(P);
    json j = {{"plucker", to_json(P)}, {"point", to_json(X)}, {"f", to_json(f_of_point(X))}};
    emit(j.dump(2), out_path);
    return kOk;
  }

  if (*ch) {
    GrassmannPoint X = point_from_json(read_json(input));
    AffinePerm f = f_of_point(X);
    json j = {{"isotropic", is_isotropic(X)},
              {"tnn", is_tnn(X)},
              {"rho_symmetric_plucker", has_plucker_symmetry(X)},
              {"f_X", to_json(f)},
              {"f_is_rho_symmetric", is_rho_symmetric(f)}};
    emit(j.dump(2), out_path);
    return kOk;
  }

  if (*po) {
    CellPoset P = build_poset(n);
    emit(dot ? poset_dot(P) : to_json(P).dump(2), out_path);
    return kOk;
  }

  if (*ve) {
    int code = kOk;
    json j = run_suite(suite, n, seed, code);
    emit(j.dump(2), out_path);
    return code;
  }

  if (*re) {
    json j = read_json(input);
    PlabicGraph G = j.contains("weights") ? network_from_json(j).graph : graph_from_json(j);
    emit(render_format == "svg" ? to_svg(G) : to_dot(G), out_path);
    return kOk;
  }

  if (*ne) {
    json j = read_json(input);
    PlabicGraph G = j.contains("weights") ? network_from_json(j).graph : graph_from_json(j);
    json a = json::array();
    for (const auto& [kind, site] : all_sites(G)) {
      PlabicGraph H = apply_move(G, Move{kind, site});
      bool sym = is_rho_symmetric_graph(H);
      if (symmetric_only && !sym) continue;
      a.push_back({{"move", move_name(kind)},
                   {"site", {site.a, site.b, site.c}},
                   {"faces", faces(H)},
                   {"rho_symmetric", sym},
                   {"hash", graph_hash(H)}});
    }
    emit(json{{"hash", graph_hash(G)}, {"neighbors", a}}.dump(2), out_path);
    return kOk;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (e.kind() == ErrorKind::SizeGuard) return kGuard;
    if (e.kind() == ErrorKind::ParseError) return kParse;
    return kDomain;
  } catch (const json::exception& e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return kParse;
  } catch (const std::logic_error& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  }
}
