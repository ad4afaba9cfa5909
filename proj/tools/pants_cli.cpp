#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "pants/blocks.hpp"
#include "pants/constructor.hpp"
#include "pants/family.hpp"
#include "pants/error.hpp"
#include "pants/io.hpp"
#include "pants/oracle.hpp"
#include "pants/polytope.hpp"
#include "pants/render.hpp"

using namespace pants;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInput = 2;

std::string point_str(const LaminationType& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
}

SigmaVector tau_from(const std::vector<int>& v) {
  return SigmaVector::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

int analyze(const std::string& path, bool exclude_origin, bool json) {
  const auto g = read_graph(path).sigma_graph();
  const auto poly = lamination_space(g);
  if (json) {
    std::cout << polytope_json(poly, exclude_origin);
    return kOk;
  }
  const auto& map = g.map();
  std::cout << "vertices " << map.num_vertices() << " edges " << map.num_edges() << " faces "
            << map.num_faces() << "\n";
  std::cout << "marked " << g.marked(1) << " " << g.marked(2) << " " << g.marked(3) << "\n";
  std::cout << "sigma " << poly.tau.str() << "\n";
  std::cout << "nu " << nu_transform(poly.tau).str() << "\n";
  std::size_t shown = 0;
  for (const auto& p : poly.points) shown += !(exclude_origin && p == LaminationType{0, 0, 0});
  std::cout << "points " << shown << "\n";
  for (const auto& p : poly.points) {
    if (exclude_origin && p == LaminationType{0, 0, 0}) continue;
    std::cout << point_str(p) << "\n";
  }
  return kOk;
}

int check(const std::vector<int>& v) {
  const auto tau = tau_from(v);
  const auto verdict = check_realizable(tau);
  std::cout << tau.str() << " " << verdict.str() << "\n";
  if (!verdict.realizable()) return kNegative;
  std::cout << "nu " << nu_transform(tau).str() << "\n";
  return kOk;
}

int construct_cmd(const std::vector<int>& v, const std::string& out) {
  const auto tau = tau_from(v);
  const auto verdict = check_realizable(tau);
  if (!verdict.realizable()) {
    std::cerr << tau.str() << " " << verdict.str() << "\n";
    return kNegative;
  }
  const auto c = construct(tau);
  const auto got = sigma_of(c.graph);
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "recipe " << to_string(c.recipe) << " " << c.detail << "\n";
  if (c.fallback) log << "fallback " << c.reason << "\n";
  log << "verified " << got.str() << (got == tau ? " ok" : " MISMATCH") << "\n";
  emit(out, graph_json(c.graph));
  return got == tau ? kOk : kNegative;
}

int build_cmd(const SigmaGraph& g, const std::string& what, const std::string& out) {
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << what << "\n";
  log << "sigma " << sigma_of(g).str() << "\n";
  emit(out, graph_json(g));
  return kOk;
}

int pillowcase_cmd(const std::vector<int>& v, const std::string& out) {
  const auto t = BlockParams::from_array({v[0], v[1], v[2], v[3], v[4], v[5]});
  if (!t.valid()) throw Error(ErrorCode::NegativeParameter, "t=" + t.str() + " is not a valid block parameter");
  return build_cmd(pillowcase(t), "pillowcase t=" + t.str(), out);
}

int families_cmd(const std::vector<int>& counts, const std::vector<int>& depths, const std::string& caps,
                 bool cross_only, const std::string& out) {
  FamilySpec spec;
  std::copy(counts.begin(), counts.end(), spec.counts.begin());
  if (!depths.empty()) std::copy(depths.begin(), depths.end(), spec.depths.begin());
  for (const char c : caps) {
    if (c < '1' || c > '3') throw Error(ErrorCode::BadMarkedIndex, std::string("cap index '") + c + "'");
    spec.caps[c - '1'] = true;
  }
  if (cross_only) spec.law = CrossingLaw::CrossOnly;
  try {
    spec.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return build_cmd(family_graph(spec), "families " + spec.str(), out);
}

struct TripResult {
  SigmaVector tau;
  std::string line;
  bool fallback = false;
  bool failed = false;
  Recipe recipe{};
};

int roundtrip(int max_mu, int threads, bool quiet) {
  if (max_mu < 0) throw Error(ErrorCode::InvalidTau, "max_mu must be non-negative");
  std::vector<SigmaVector> targets;
  for (int a = 0; a <= max_mu; ++a)
    for (int b = 0; b <= max_mu; ++b)
      for (int c = 0; c <= max_mu; ++c)
        for (int d = 1; d <= 2 * max_mu; ++d)
          for (int e = 1; e <= 2 * max_mu; ++e)
            for (int f = 1; f <= 2 * max_mu; ++f) {
              const SigmaVector tau{{a, b, c}, {d, e, f}};
              if (check_realizable(tau).realizable()) targets.push_back(tau);
            }

  std::vector<TripResult> results(targets.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < targets.size(); k = next++) {
      auto& r = results[k];
      r.tau = targets[k];
      try {
        const auto c = construct(r.tau);
        r.recipe = c.recipe;
        r.fallback = c.fallback;
        if (!(sigma_of(c.graph) == r.tau)) {
          r.failed = true;
          r.line = "FAIL " + r.tau.str() + " verification mismatch";
        } else if (c.fallback) {
          r.line = "fallback " + r.tau.str() + " " + to_string(c.recipe) + " " + c.detail + " (" +
                   c.reason + ")";
        }
      } catch (const Error& e) {
        r.failed = true;
        r.line = "FAIL " + r.tau.str() + " " + e.what();
      }
    }
  };
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<std::string, int> tally;
  int failures = 0, fallbacks = 0;
  for (const auto& r : results) {
    if (!r.line.empty() && (r.failed || !quiet)) std::cout << r.line << "\n";
    failures += r.failed;
    fallbacks += r.fallback;
    if (!r.failed) ++tally[to_string(r.recipe)];
  }
  for (const auto& [name, n] : tally) std::cout << name << " " << n << "\n";
  std::cout << "realizable " << targets.size() << " fallbacks " << fallbacks << " failures "
            << failures << " seconds " << secs << "\n";
  return failures ? kNegative : kOk;
}

int render(const std::string& path, const std::string& out, int outer, bool plain, int size) {
  const auto g = read_graph(path).sigma_graph();
  RenderOptions options;
  options.size = size;
  options.special_loops = !plain;
  if (outer >= 0) options.outer = outer;
  emit(out, render_svg(g, options));
  return kOk;
}

int oracle(const std::string& path, bool complete, std::size_t max_nodes, std::size_t max_cycles) {
  const auto g = read_graph(path).sigma_graph();
  const OracleLimits limits{max_cycles, max_nodes};
  const auto catalog = complete ? all_simple_cycles(g, limits) : packing_catalog(g, limits);
  const auto brute = lamination_space_bruteforce(catalog, limits);
  const auto poly = lamination_space(g);
  std::cout << "cycles " << catalog.size() << " enumerated " << catalog.enumerated << "\n";
  std::cout << "max disjoint";
  for (int i = 1; i <= 3; ++i) std::cout << " " << max_disjoint_type(catalog, i, limits);
  std::cout << "\nsigma " << poly.tau.str() << "\n";
  std::cout << "bruteforce " << brute.size() << " polytope " << poly.points.size() << "\n";
  if (brute == poly.points) {
    std::cout << "agree\n";
    return kOk;
  }
  for (const auto& p : brute) {
    if (!poly.contains(p)) std::cout << "only bruteforce " << point_str(p) << "\n";
  }
  for (const auto& p : poly.points) {
    if (!std::binary_search(brute.begin(), brute.end(), p)) std::cout << "only polytope " << point_str(p) << "\n";
  }
  std::cout << "disagree\n";
  return kNegative;
}

bool input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRealizable:
    case ErrorCode::ConstructionFailed:
    case ErrorCode::SearchExhausted:
    case ErrorCode::LimitExceeded:
    case ErrorCode::InvariantViolated:
      return false;
    default:
      return true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lamination spaces of graphs on the thrice-punctured sphere"};
  app.require_subcommand(1);

  std::string path, out;
  std::vector<int> tau;
  bool exclude_origin = false, json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "sigma vector and lamination points of a graph");
  analyze_cmd->add_option("graph", path, "graph JSON file")->required();
  analyze_cmd->add_flag("--exclude-origin", exclude_origin, "omit the empty lamination");
  analyze_cmd->add_flag("--json", json, "print the polytope as JSON");

  auto* check_cmd = app.add_subcommand("check", "realizability of a sextuple");
  check_cmd->add_option("tau", tau, "M1 M2 M3 d1 d2 d3")->required()->expected(6);

  std::vector<int> block, counts, depths;
  std::string caps;
  bool cross_only = false;
  auto* construct_sub = app.add_subcommand("construct", "graph realising a sextuple");
  auto* tau_opt = construct_sub->add_option("tau", tau, "M1 M2 M3 d1 d2 d3")->expected(6);
  auto* block_opt = construct_sub->add_option("--pillowcase", block, "build G_t for t = l1 l2 l3 n1 n2 n3")
                        ->expected(6);
  auto* counts_opt = construct_sub->add_option("--families", counts, "circle counts c1 c2 c3")->expected(3);
  construct_sub->add_option("--depths", depths, "crossing depths p1 p2 p3")->expected(3)->needs(counts_opt);
  construct_sub->add_option("--caps", caps, "families with a tangent cap, e.g. 12")->needs(counts_opt);
  construct_sub->add_flag("--cross-only", cross_only, "crossing circles never touch")->needs(counts_opt);
  construct_sub->add_option("-o,--output", out, "output file (default stdout)");
  tau_opt->excludes(block_opt)->excludes(counts_opt);
  block_opt->excludes(counts_opt);
  construct_sub->require_option(1, 0);

  int max_mu = 3, threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool quiet = false;
  auto* trip_cmd = app.add_subcommand("roundtrip", "construct and verify every realizable sextuple");
  trip_cmd->add_option("max_mu", max_mu, "largest M_i")->required();
  trip_cmd->add_option("-j,--threads", threads, "worker threads");
  trip_cmd->add_flag("-q,--quiet", quiet, "list failures only");

  int outer = -1, size = 640;
  bool plain = false;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a graph");
  render_cmd->add_option("graph", path, "graph JSON file")->required();
  render_cmd->add_option("-o,--output", out, "output file (default stdout)");
  render_cmd->add_option("--outer", outer, "face drawn outermost");
  render_cmd->add_option("--size", size, "canvas size in pixels")->check(CLI::Range(100, 10000));
  render_cmd->add_flag("--plain", plain, "do not highlight special loops");

  bool complete = false;
  std::size_t max_nodes = 200000000, max_cycles = 1000000;
  auto* oracle_cmd = app.add_subcommand("oracle", "compare with brute-force cycle packing");
  oracle_cmd->add_option("graph", path, "graph JSON file")->required();
  oracle_cmd->add_flag("--complete", complete, "use every simple cycle");
  oracle_cmd->add_option("--max-nodes", max_nodes, "search node budget");
  oracle_cmd->add_option("--max-cycles", max_cycles, "stored cycle budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze_cmd) return analyze(path, exclude_origin, json);
    if (*check_cmd) return check(tau);
    if (*construct_sub && !block.empty()) return pillowcase_cmd(block, out);
    if (*construct_sub && !counts.empty()) return families_cmd(counts, depths, caps, cross_only, out);
    if (*construct_sub && tau.empty()) throw Error(ErrorCode::ParseError, "construct needs tau, --pillowcase or --families");
    if (*construct_sub) return construct_cmd(tau, out);
    if (*trip_cmd) return roundtrip(max_mu, threads, quiet);
    if (*render_cmd) return render(path, out, outer, plain, size);
    if (*oracle_cmd) return oracle(path, complete, max_nodes, max_cycles);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.code()) ? kInput : kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
