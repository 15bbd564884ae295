// superstab: super-stable matching existence, minimum hospital deletion and
// two-sided deletion from the command line. JSON goes to stdout, human
// readable notes to stderr. Exit codes: 0 yes/agree, 1 no/none/disagree,
// 2 error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superstab/commands.hpp"
#include "superstab/superstab.hpp"

namespace {

using namespace superstab;

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::size_t non_negative(long long v, const char* what) {
  if (v < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

int emit(const commands::Result& r) {
  std::cout << r.json.dump(2) << '\n';
  if (!r.summary.empty()) std::cerr << r.summary << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super-stable matchings with ties: existence, agent deletion, verification"};
  app.require_subcommand(1);

  bool no_timing = false;
  long long max_doctors = 20;
  app.add_flag("--no-timing", no_timing, "Omit stats.elapsed_ms so output is byte-stable");
  app.add_option("--max-doctors", max_doctors, "Doctor-subset cap for the exact two-sided solver");

  std::string file;
  auto* check = app.add_subcommand("check", "Decide whether a super-stable matching exists");
  check->add_option("file", file, "Instance file (.ssm, '-' for stdin)")->required();

  long long q = -1;
  auto* solve1 = app.add_subcommand("solve1", "Minimum hospital deletion against budget q");
  solve1->add_option("file", file, "Instance file")->required();
  solve1->add_option("--q", q, "Hospital deletion budget")->required();

  long long q1 = 0, q2 = 0;
  auto* solve2 = app.add_subcommand("solve2", "Exact two-sided deletion within budgets");
  solve2->add_option("file", file, "Instance file")->required();
  solve2->add_option("--q1", q1, "Doctor deletion budget")->required();
  solve2->add_option("--q2", q2, "Hospital deletion budget")->required();

  std::vector<std::string> deleted;
  auto* closure = app.add_subcommand("closure", "Print the forbidden-edge closure trace");
  closure->add_option("file", file, "Instance file")->required();
  closure->add_option("--delete", deleted, "Hospitals deleted up front");

  std::string mode = "existence";
  auto* verify = app.add_subcommand("verify", "Cross-check the solvers against brute force");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--mode", mode, "existence | problem1 | problem2")
      ->check(CLI::IsMember({"existence", "problem1", "problem2"}));
  verify->add_option("--q1", q1, "Doctor budget (problem2)");
  verify->add_option("--q2", q2, "Hospital budget (problem2)");

  long long gen_doctors = 0, gen_hospitals = 0;
  double density = 1.0, tie_prob = 0.0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--doctors", gen_doctors, "Number of doctors")->required();
  gen->add_option("--hospitals", gen_hospitals, "Number of hospitals")->required();
  gen->add_option("--density", density, "Edge probability in [0,1]");
  gen->add_option("--tie-prob", tie_prob, "Tie probability per list boundary in [0,1]");
  gen->add_option("--seed", seed, "Random seed");

  auto* reduce = app.add_subcommand("reduce", "Reduce a Minimum Coverage instance to two-sided deletion");
  reduce->add_option("file", file, "Coverage file (.cov)")->required();

  auto* transpose_cmd = app.add_subcommand("transpose", "Swap doctors and hospitals");
  transpose_cmd->add_option("file", file, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : commands::kExitError;
  }

  try {
    commands::Options opts;
    opts.timing = !no_timing;
    opts.limits = OracleLimits::from_env();
    opts.max_doctors = non_negative(max_doctors, "--max-doctors");

    if (*check) return emit(commands::check(load_instance(file), opts));
    if (*solve1) return emit(commands::solve1(load_instance(file), non_negative(q, "--q"), opts));
    if (*solve2) {
      const Instance inst = load_instance(file);
      if (inst.num_doctors() > opts.max_doctors)
        std::cerr << "warning: " << inst.num_doctors() << " doctors exceed the enumeration cap of "
                  << opts.max_doctors << '\n';
      return emit(commands::solve2(inst, non_negative(q1, "--q1"), non_negative(q2, "--q2"), opts));
    }
    if (*closure) {
      std::vector<VertexId> hs;
      const Instance inst = load_instance(file);
      for (const auto& name : deleted) {
        if (inst.find_doctor(name)) throw InvalidArgument("--delete takes hospitals only; '" + name + "' is a doctor");
        hs.push_back(hospital(name));
      }
      return emit(commands::closure_trace(inst, hs, opts));
    }
    if (*verify) {
      const auto m = mode == "problem1"   ? commands::VerifyMode::Problem1
                     : mode == "problem2" ? commands::VerifyMode::Problem2
                                          : commands::VerifyMode::Existence;
      return emit(commands::verify(load_instance(file), m, non_negative(q1, "--q1"), non_negative(q2, "--q2"), opts));
    }
    if (*gen) {
      GeneratorParams p;
      p.doctors = non_negative(gen_doctors, "--doctors");
      p.hospitals = non_negative(gen_hospitals, "--hospitals");
      p.density = density;
      p.tie_prob = tie_prob;
      p.seed = seed;
      std::cout << serialize_instance(generate_instance(p));
      return commands::kExitYes;
    }
    if (*reduce) {
      std::string text;
      try {
        text = commands::reduce_text(parse_coverage(read_file(file)));
      } catch (const ParseError& e) {
        throw Error(file + ": " + e.what());
      }
      std::cout << text;
      return commands::kExitYes;
    }
    if (*transpose_cmd) {
      std::cerr << "warning: the closure is not side-symmetric; results on the transposed instance concern doctor "
                   "deletion and need not mirror the original\n";
      std::cout << serialize_instance(transpose(load_instance(file)));
      return commands::kExitYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return commands::kExitError;
  }
  return commands::kExitError;
}
