// gcdlcm: smallest subsets preserving gcd(A ∪ B) or lcm(A ∪ B).
//
// Exit status: 0 success, 1 infeasible input (certificate on stdout),
// 2 usage, parse or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcdlcm/circulant.hpp"
#include "gcdlcm/coprime_basis.hpp"
#include "gcdlcm/errors.hpp"
#include "gcdlcm/generate.hpp"
#include "gcdlcm/json_io.hpp"
#include "gcdlcm/reductions.hpp"
#include "gcdlcm/solver.hpp"

namespace {

using namespace gcdlcm;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string input;
  std::string output;
  std::string mode = "min-gcd";
  std::string method = "exact";
  std::vector<std::string> a_values;
  std::vector<std::string> b_values;
  bool timing = false;
  std::size_t brute_cap = 20;
  std::uint64_t bfs_cap = 1'000'000;
  // reduce
  std::string cover_path;
  std::string reverse_to;
  // circulant
  std::uint64_t m = 0;
  // gen
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::uint64_t max_value = 100;
  std::size_t b_count = 0;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'", "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j, const RunConfig& cfg) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ParseError("cannot open output file '" + cfg.output + "'", "");
  out << text;
}

ProblemInstance load_instance(const RunConfig& cfg) {
  if (!cfg.input.empty()) return instance_from_json(parse_json_text(read_text(cfg.input)));
  if (cfg.a_values.empty() && cfg.b_values.empty()) {
    throw ParseError("give --input or inline --A/--B values", "");
  }
  ProblemInstance inst;
  inst.mode = parse_mode(cfg.mode);
  try {
    inst.a = NatSet::from_strings(cfg.a_values);
    inst.b = NatSet::from_strings(cfg.b_values);
    inst.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "--A/--B");
  }
  return inst;
}

int run_solve(const RunConfig& cfg) {
  const auto inst = load_instance(cfg);
  SubsetSolution sol = cfg.method == "brute" ? brute_force(inst, cfg.brute_cap)
                                             : solve(inst, parse_method(cfg.method));
  emit(solution_to_json(sol, cfg.timing), cfg);
  return kOk;
}

int run_reduce(const RunConfig& cfg) {
  if (!cfg.cover_path.empty()) {
    const auto cover = cover_from_json(parse_json_text(read_text(cfg.cover_path)));
    NatFamily family;
    if (cfg.reverse_to == "lcm") {
      family = cover_to_lcm(cover);
    } else if (cfg.reverse_to == "gcd") {
      family = cover_to_gcd(cover);
    } else {
      throw ParseError("--to must be lcm or gcd", "--to");
    }
    emit(Json{{"direction", "reverse"}, {"family", family_to_json(family)}, {"to", cfg.reverse_to}},
         cfg);
    return kOk;
  }
  const auto inst = load_instance(cfg);
  const Pipeline pipe = build_pipeline(inst);
  Json out{{"direction", "forward"},
           {"mode", mode_name(inst.mode)},
           {"reduction", reduction_to_json(pipe.reduction)},
           {"representatives", Json::array()},
           {"target", nat_to_json(pipe.target)},
           {"trivial", pipe.trivial}};
  for (const auto& r : pipe.representatives) out["representatives"].push_back(nat_to_json(r));
  if (pipe.elimination) out["elimination"] = elimination_to_json(*pipe.elimination);
  emit(out, cfg);
  return kOk;
}

int run_basis(const RunConfig& cfg) {
  NatSet values;
  if (!cfg.input.empty()) {
    values = load_instance(cfg).a;
  } else {
    try {
      values = NatSet::from_strings(cfg.a_values);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), "--A");
    }
  }
  emit(basis_to_json(compute_basis(values)), cfg);
  return kOk;
}

int run_circulant(const RunConfig& cfg) {
  CirculantGraph g;
  g.m = cfg.m;
  try {
    g.links = NatSet::from_strings(cfg.a_values);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "--links");
  }
  if (!is_connected_gcd(g)) {
    std::string certificate;
    try {
      prune_links(g, Method::Exact);
    } catch (const InfeasibleError& e) {
      certificate = e.certificate();
    }
    emit(Json{{"certificate", certificate},
              {"connected", false},
              {"pruned_links", Json::array()},
              {"removed_count", 0}},
         cfg);
    return kInfeasible;
  }
  const NatSet pruned = prune_links(g, parse_method(cfg.method));
  emit(Json{{"connected", true},
            {"pruned_links", natset_to_json(pruned)},
            {"removed_count", g.links.size() - pruned.size()}},
       cfg);
  return kOk;
}

int run_gen(const RunConfig& cfg) {
  const auto inst =
      generate_instance(cfg.seed, cfg.count, cfg.max_value, parse_mode(cfg.mode), cfg.b_count);
  emit(instance_to_json(inst), cfg);
  return kOk;
}

void add_instance_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "Instance JSON file, or - for stdin");
  cmd->add_option("--mode", cfg.mode, "min-gcd or max-lcm (inline instances)")
      ->check(CLI::IsMember({"min-gcd", "max-lcm"}));
  cmd->add_option("--A", cfg.a_values, "Inline elements of A")->delimiter(',');
  cmd->add_option("--B", cfg.b_values, "Inline elements of B")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smallest subsets S of A with gcd(S ∪ B) = gcd(A ∪ B) or lcm(S ∪ B) = lcm(A ∪ B)"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  add_instance_options(solve_cmd, cfg);
  solve_cmd->add_option("--method", cfg.method, "exact, greedy or brute")
      ->check(CLI::IsMember({"exact", "greedy", "brute"}));
  solve_cmd->add_option("--brute-cap", cfg.brute_cap, "Largest |A| brute force accepts");
  solve_cmd->add_flag("--timing", cfg.timing, "Include elapsed_ms in stats");

  auto* reduce_cmd = app.add_subcommand("reduce", "Emit the Minimum Cover reduction, or reverse one");
  add_instance_options(reduce_cmd, cfg);
  reduce_cmd->add_option("--cover", cfg.cover_path, "Cover instance JSON to reduce back to integers");
  reduce_cmd->add_option("--to", cfg.reverse_to, "Reverse target: lcm or gcd")
      ->check(CLI::IsMember({"lcm", "gcd"}));

  auto* basis_cmd = app.add_subcommand("basis", "Coprime basis and exponent matrix of A");
  add_instance_options(basis_cmd, cfg);

  auto* circ_cmd = app.add_subcommand("circulant", "Connectivity and link pruning of G(links, m)");
  circ_cmd->add_option("--m", cfg.m, "Number of nodes")->required();
  circ_cmd->add_option("--links", cfg.a_values, "Links")->delimiter(',');
  circ_cmd->add_option("--method", cfg.method, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a pseudo-random instance");
  gen_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  gen_cmd->add_option("--count", cfg.count, "Draws for A");
  gen_cmd->add_option("--max-value", cfg.max_value, "Largest element");
  gen_cmd->add_option("--b-count", cfg.b_count, "Draws for B");
  gen_cmd->add_option("--mode", cfg.mode)->check(CLI::IsMember({"min-gcd", "max-lcm"}));

  for (auto* cmd : {solve_cmd, reduce_cmd, basis_cmd, circ_cmd, gen_cmd}) {
    cmd->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(cfg);
    if (*reduce_cmd) return run_reduce(cfg);
    if (*basis_cmd) return run_basis(cfg);
    if (*circ_cmd) return run_circulant(cfg);
    if (*gen_cmd) return run_gen(cfg);
  } catch (const InfeasibleError& e) {
    std::cout << Json{{"certificate", e.certificate()}, {"error", e.what()}}.dump(2) << "\n";
    return kInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error";
    if (!e.field().empty()) std::cerr << " at " << e.field();
    std::cerr << ": " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RefusalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
