// planeheight: solve, check and draw minimum-height plane drawings of trees.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planeheight/dp.hpp"
#include "planeheight/io.hpp"
#include "planeheight/oracle.hpp"

using namespace planeheight;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kCapExceeded = 3, kIllegal = 4 };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// a tree given inline, or a file holding one
OrderedTree read_tree(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '(') text = slurp(arg);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return parse_tree(text);
}

struct Solved {
  int height = 0;
  Drawing drawing;
  std::size_t table_size = 0;
  std::string table_dump;
  long long states = 0;
};

Solved run_method(const OrderedTree& t, const std::string& method, int cap, bool want_table) {
  Solved s;
  if (method == "dp" || method == "dp-topdown") {
    DpResult r = method == "dp" ? solve_bottomup(t) : solve_topdown(t);
    s.height = r.height;
    s.drawing = reconstruct_drawing(t, r.table);
    s.table_size = r.table.size();
    if (want_table) s.table_dump = dump_table(t, r.table);
  } else {
    OracleOptions opt;
    opt.edge_cap = cap;
    OracleResult r = method == "oracle" ? optimal_height_exact(LocalDisk::whole(t), opt)
                                        : optimal_height_bendfree(LocalDisk::whole(t), opt);
    s.height = r.height;
    s.drawing = r.witness;
    s.states = r.states;
  }
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_solve(const std::string& input, const std::string& method, int cap, const std::string& svg,
              const std::string& json_path, const std::string& table_path) {
  OrderedTree t;
  try {
    t = read_tree(input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const FormatError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  auto t0 = std::chrono::steady_clock::now();
  Solved s;
  try {
    s = run_method(t, method, cap, !table_path.empty());
  } catch (const OracleScaleExceeded& e) {
    std::cerr << e.what() << "\n";
    return kCapExceeded;
  }
  const double secs = seconds_since(t0);

  json drawing = json::parse(drawing_to_json(s.drawing));
  drawing["height"] = s.height;
  json out{{"tree", serialize_tree(t)}, {"method", method}, {"height", s.height}, {"moves", drawing["moves"]},
           {"timings", {{"solve_seconds", secs}}}};
  if (s.table_size) out["table_size"] = s.table_size;
  if (s.states) out["states"] = s.states;
  std::cout << out.dump() << "\n";
  std::cerr << "height " << s.height << " (" << method << ", " << t.edge_count() << " edges, " << secs << " s)\n";

  if (!json_path.empty()) spit(json_path, drawing.dump(2) + "\n");
  if (!svg.empty()) spit(svg, to_svg(render(s.drawing)));
  if (!table_path.empty()) {
    if (s.table_dump.empty()) std::cerr << "no table for method " << method << "\n";
    else spit(table_path, s.table_dump);
  }
  return kOk;
}

int cmd_verify(const std::string& path) {
  Drawing d;
  json raw;
  try {
    const std::string text = slurp(path);
    d = drawing_from_json(text);
    raw = json::parse(text);
    d.disk.validate();
  } catch (const std::exception& e) {
    std::cerr << "bad drawing: " << e.what() << "\n";
    return kBadInput;
  }
  json out;
  try {
    replay(d);
  } catch (const IllegalMove& e) {
    out = {{"legal", false}, {"index", e.index()}, {"error", e.what()}};
    std::cout << out.dump() << "\n";
    std::cerr << "illegal: " << e.what() << "\n";
    return kIllegal;
  }
  const int measured = height_of(d);
  auto g = render(d);
  const int rendered = verify_rendering(g);
  const bool planar = is_planar(g);
  out = {{"legal", true}, {"measured", measured}, {"rendered", rendered}, {"planar", planar}};
  bool ok = planar && rendered == measured;
  if (raw.contains("height")) {
    out["claimed"] = raw["height"];
    ok = ok && raw["height"] == measured;
  }
  out["consistent"] = ok;
  std::cout << out.dump() << "\n";
  std::cerr << "measured " << measured << ", rendered " << rendered << (planar ? ", planar" : ", NOT planar");
  if (raw.contains("height")) std::cerr << ", claimed " << raw["height"].dump();
  std::cerr << (ok ? "" : "  MISMATCH") << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_render(const std::string& path, const std::string& svg) {
  Drawing d;
  try {
    d = drawing_from_json(slurp(path));
    d.disk.validate();
    auto g = render(d);
    spit(svg, to_svg(g));
    json out{{"svg", svg}, {"width", g.width}, {"height", verify_rendering(g)}, {"planar", is_planar(g)}};
    std::cout << out.dump() << "\n";
  } catch (const IllegalMove& e) {
    std::cerr << "illegal: " << e.what() << "\n";
    return kIllegal;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  std::cerr << "wrote " << svg << "\n";
  return kOk;
}

int cmd_enumerate(int edges, int cap) {
  auto trees = enumerate_trees(edges);
  json bad = json::array();
  std::map<int, int> histogram;
  for (const auto& t : trees) {
    std::map<std::string, int> h;
    h["dp"] = solve_bottomup(t).height;
    h["dp-topdown"] = solve_topdown(t).height;
    if (edges <= cap) h["oracle"] = optimal_height_exact(LocalDisk::whole(t)).height;
    ++histogram[h["dp"]];
    for (const auto& [m, v] : h)
      if (v != h["dp"]) {
        bad.push_back({{"tree", serialize_tree(t)}, {"heights", h}});
        std::cerr << "disagreement on " << serialize_tree(t) << "\n";
        break;
      }
  }
  json hist = json::object();
  for (auto [k, v] : histogram) hist[std::to_string(k)] = v;
  json out{{"edges", edges}, {"trees", trees.size()}, {"oracle_checked", edges <= cap}, {"heights", hist},
           {"disagreements", bad}};
  std::cout << out.dump() << "\n";
  std::cerr << trees.size() << " trees, " << bad.size() << " disagreements\n";
  return bad.empty() ? kOk : kMismatch;
}

int cmd_generate(int edges, std::uint64_t seed, int count) {
  for (int i = 0; i < count; ++i) std::cout << serialize_tree(random_tree(edges, seed + i)) << "\n";
  return kOk;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, const std::string& method) {
  json rows = json::array();
  for (int n : sizes) {
    auto t = random_tree(n - 1, seed);
    auto t0 = std::chrono::steady_clock::now();
    Solved s = run_method(t, method, 1 << 20, false);
    const double secs = seconds_since(t0);
    rows.push_back({{"n", n}, {"height", s.height}, {"seconds", secs}, {"table_size", s.table_size}});
    std::cerr << "n=" << n << " height=" << s.height << " table=" << s.table_size << " " << secs << " s\n";
  }
  std::cout << rows.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-height plane drawings of ordered trees"};
  app.require_subcommand(1);

  std::string input, method = "dp", svg, json_path, table_path, drawing_path;
  int cap = 8, edges = 0, count = 1;
  std::uint64_t seed = 1;
  std::vector<int> sizes{10, 20, 30, 40, 50};
  const std::vector<std::string> methods{"dp", "dp-topdown", "oracle", "bendfree-oracle"};

  auto* solve = app.add_subcommand("solve", "optimal height of a tree");
  solve->add_option("tree", input, "tree text like (()()) or a file holding it")->required();
  solve->add_option("--method", method, "dp, dp-topdown, oracle or bendfree-oracle")->check(CLI::IsMember(methods));
  solve->add_option("--cap", cap, "edge limit for the oracle methods");
  solve->add_option("--render", svg, "write an SVG of the drawing");
  solve->add_option("--json", json_path, "write the drawing as JSON");
  solve->add_option("--dump-table", table_path, "write the DP table as JSON lines");

  auto* verify = app.add_subcommand("verify", "replay and measure a drawing file");
  verify->add_option("drawing", drawing_path)->required();

  auto* rend = app.add_subcommand("render", "draw a drawing file as SVG");
  rend->add_option("drawing", drawing_path)->required();
  rend->add_option("-o,--output", svg, "SVG path")->required();

  auto* enumerate = app.add_subcommand("enumerate", "solve every tree with N edges by every method");
  enumerate->add_option("--edges", edges)->required()->check(CLI::Range(0, 12));
  enumerate->add_option("--cap", cap, "largest edge count checked against the oracle");

  auto* generate = app.add_subcommand("generate", "uniform random trees");
  generate->add_option("--edges", edges)->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", seed);
  generate->add_option("--count", count)->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "time the solver on random trees");
  bench->add_option("--sizes", sizes)->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  bench->add_option("--method", method)->check(CLI::IsMember(methods));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  if (*solve) return cmd_solve(input, method, cap, svg, json_path, table_path);
  if (*verify) return cmd_verify(drawing_path);
  if (*rend) return cmd_render(drawing_path, svg);
  if (*enumerate) return cmd_enumerate(edges, cap);
  if (*generate) return cmd_generate(edges, seed, count);
  if (*bench) return cmd_bench(sizes, seed, method);
  return kBadInput;
}
