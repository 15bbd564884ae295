#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "superstab/hardness.hpp"
#include "superstab/model.hpp"
#include "superstab/oracle.hpp"
#include "superstab/superstable.hpp"

// Command implementations behind the superstab CLI. Each returns the JSON
// document for stdout, a one-line human summary for stderr, and the exit
// code: 0 = yes / agree, 1 = no / none / disagree. Errors surface as
// exceptions and map to exit code 2 in the driver.

namespace superstab::commands {

using Json = nlohmann::ordered_json;

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

struct Options {
  bool timing = true;  // include stats.elapsed_ms
  OracleLimits limits;
  std::size_t max_doctors = 20;  // doctor-subset cap of the exact two-sided solver
};

struct Result {
  Json json;
  int exit_code = kExitYes;
  std::string summary;
};

inline Json edges_json(const Instance& inst, const EdgeSet& F) {
  Json out = Json::array();
  for (const auto& [d, h] : edge_names(inst, F)) out.push_back(Json::array({d, h}));
  return out;
}

inline Json names_json(const Instance& inst, const VertexMask& m, Side side) {
  Json out = Json::array();
  for (const auto& v : inst.vertices(m))
    if (v.side == side) out.push_back(v.name);
  return out;
}

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void add_elapsed(Json& stats, const Options& opts, const Stopwatch& clock) {
  if (opts.timing) stats["elapsed_ms"] = clock.elapsed_ms();
}

inline std::string join(const Json& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : " ") + n.get<std::string>();
  return s.empty() ? "(none)" : s;
}

}  // namespace detail

/// Does a super-stable matching exist?
inline Result check(const Instance& inst, const Options& opts = {}) {
  detail::Stopwatch clock;
  const DeletionCertificate cert = solve_min_hospital_deletion(inst);
  const bool exists = cert.critical.empty();
  Result r;
  r.json["command"] = "check";
  r.json["answer"] = exists ? "yes" : "none";
  if (exists) r.json["matching"] = edges_json(inst, cert.mu.edges());
  Json stats;
  stats["iterations"] = cert.trace.iterations;
  stats["forbidden"] = cert.forbidden.size();
  detail::add_elapsed(stats, opts, clock);
  r.json["stats"] = std::move(stats);
  r.exit_code = exists ? kExitYes : kExitNo;
  r.summary = exists ? "super-stable matching found (" + std::to_string(cert.mu.size()) + " pairs)"
                     : "no super-stable matching";
  return r;
}

/// Minimum hospital deletion, compared against budget q.
inline Result solve1(const Instance& inst, std::size_t q, const Options& opts = {}) {
  detail::Stopwatch clock;
  const Problem1Answer ans = decide_problem1(inst, q);
  const auto& cert = ans.certificate;
  Result r;
  r.json["command"] = "solve1";
  r.json["answer"] = ans.feasible ? "yes" : "no";
  r.json["q"] = q;
  r.json["min_deletions"] = cert.deletions();
  r.json["deleted_hospitals"] = names_json(inst, cert.critical, Side::Hospital);
  r.json["matching"] = edges_json(inst, cert.mu.edges());
  Json stats;
  stats["iterations"] = cert.trace.iterations;
  stats["forbidden"] = cert.forbidden.size();
  detail::add_elapsed(stats, opts, clock);
  r.json["stats"] = std::move(stats);
  r.exit_code = ans.feasible ? kExitYes : kExitNo;
  r.summary = "minimum hospital deletion " + std::to_string(cert.deletions()) + " [" +
              detail::join(r.json["deleted_hospitals"]) + "], budget " + std::to_string(q) + ": " +
              (ans.feasible ? "yes" : "no");
  return r;
}

/// Two-sided deletion within budgets q1 (doctors) and q2 (hospitals).
inline Result solve2(const Instance& inst, std::size_t q1, std::size_t q2, const Options& opts = {}) {
  detail::Stopwatch clock;
  const auto witness = solve_problem2_exact(inst, q1, q2, opts.max_doctors);
  Result r;
  r.json["command"] = "solve2";
  r.json["answer"] = witness ? "yes" : "no";
  r.json["q1"] = q1;
  r.json["q2"] = q2;
  if (witness) {
    r.json["deleted_doctors"] = names_json(inst, *witness, Side::Doctor);
    r.json["deleted_hospitals"] = names_json(inst, *witness, Side::Hospital);
    const auto mu = exists_super_stable(inst, *witness);
    r.json["matching"] = edges_json(inst, mu->edges());
  }
  Json stats = Json::object();
  detail::add_elapsed(stats, opts, clock);
  if (!stats.empty()) r.json["stats"] = std::move(stats);
  r.exit_code = witness ? kExitYes : kExitNo;
  r.summary = witness ? "delete doctors [" + detail::join(r.json["deleted_doctors"]) + "] and hospitals [" +
                            detail::join(r.json["deleted_hospitals"]) + "]"
                      : "no deletion within budgets q1=" + std::to_string(q1) + " q2=" + std::to_string(q2);
  return r;
}

/// Full round-by-round closure trace for the given deleted hospitals.
inline Result closure_trace(const Instance& inst, const std::vector<VertexId>& deleted, const Options& opts = {}) {
  detail::Stopwatch clock;
  const Closure c = closure(inst, deleted);
  Result r;
  r.json["command"] = "closure";
  r.json["deleted_hospitals"] = names_json(inst, inst.mask(deleted), Side::Hospital);
  r.json["R0"] = edges_json(inst, c.trace.initial);
  Json steps = Json::array();
  for (const auto& s : c.trace.steps) {
    Json step;
    step["t"] = s.t;
    step["P"] = edges_json(inst, s.candidates);
    step["Q"] = edges_json(inst, s.accepted);
    step["R"] = edges_json(inst, s.forbidden);
    steps.push_back(std::move(step));
  }
  r.json["steps"] = std::move(steps);
  r.json["iterations"] = c.trace.iterations;
  r.json["B"] = edges_json(inst, c.forbidden);
  Json stats = Json::object();
  detail::add_elapsed(stats, opts, clock);
  if (!stats.empty()) r.json["stats"] = std::move(stats);
  r.summary = "closure reached its fixed point after " + std::to_string(c.trace.iterations) + " iterations, " +
              std::to_string(c.forbidden.size()) + " forbidden edges";
  return r;
}

enum class VerifyMode { Existence, Problem1, Problem2 };

inline const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Existence: return "existence";
    case VerifyMode::Problem1: return "problem1";
    case VerifyMode::Problem2: return "problem2";
  }
  return "?";
}

/// Runs the fast solver and the brute-force oracle on the same question.
inline Result verify(const Instance& inst, VerifyMode mode, std::size_t q1 = 0, std::size_t q2 = 0,
                     const Options& opts = {}) {
  detail::Stopwatch clock;
  Result r;
  r.json["command"] = "verify";
  r.json["mode"] = to_string(mode);
  Json solver, oracle;
  bool agree = false;
  switch (mode) {
    case VerifyMode::Existence: {
      const auto fast = exists_super_stable(inst);
      std::size_t space = 0;
      const auto all = enumerate_super_stable(inst, VertexMask::none(inst), opts.limits, &space);
      solver["answer"] = fast ? "yes" : "no";
      oracle["answer"] = all.empty() ? "no" : "yes";
      oracle["super_stable_count"] = all.size();
      oracle["search_space"] = space;
      const bool valid = !fast || is_super_stable(inst, *fast);
      solver["valid"] = valid;
      agree = valid && fast.has_value() == !all.empty();
      break;
    }
    case VerifyMode::Problem1: {
      const auto cert = solve_min_hospital_deletion(inst);
      const auto brute = oracle_min_hospital_deletion(inst, opts.limits);
      solver["min_deletions"] = cert.deletions();
      solver["deleted_hospitals"] = names_json(inst, cert.critical, Side::Hospital);
      oracle["min_deletions"] = brute.size;
      oracle["deleted_hospitals"] = names_json(inst, brute.witness, Side::Hospital);
      const bool valid = is_super_stable(inst, cert.critical, cert.mu);
      solver["valid"] = valid;
      agree = valid && cert.deletions() == brute.size;
      break;
    }
    case VerifyMode::Problem2: {
      r.json["q1"] = q1;
      r.json["q2"] = q2;
      const auto fast = solve_problem2_exact(inst, q1, q2, opts.max_doctors);
      const auto brute = oracle_problem2(inst, q1, q2, opts.limits);
      auto describe = [&](Json& j, const std::optional<VertexMask>& x) {
        j["answer"] = x ? "yes" : "no";
        if (!x) return true;
        j["deleted_doctors"] = names_json(inst, *x, Side::Doctor);
        j["deleted_hospitals"] = names_json(inst, *x, Side::Hospital);
        const bool valid = x->doctor_count() <= q1 && x->hospital_count() <= q2 &&
                           exists_super_stable(inst, *x).has_value();
        j["valid"] = valid;
        return valid;
      };
      const bool fast_ok = describe(solver, fast);
      const bool brute_ok = describe(oracle, brute);
      agree = fast_ok && brute_ok && fast.has_value() == brute.has_value();
      break;
    }
  }
  r.json["verdict"] = agree ? "AGREE" : "DISAGREE";
  r.json["solver"] = std::move(solver);
  r.json["oracle"] = std::move(oracle);
  Json stats = Json::object();
  detail::add_elapsed(stats, opts, clock);
  if (!stats.empty()) r.json["stats"] = std::move(stats);
  r.exit_code = agree ? kExitYes : kExitNo;
  r.summary = std::string(to_string(mode)) + ": " + (agree ? "AGREE" : "DISAGREE");
  return r;
}

/// .ssm text of the coverage reduction followed by the budget comment line.
inline std::string reduce_text(const CoverageInstance& cov) {
  const ReductionOutput red = reduce_min_coverage(cov);
  return serialize_instance(red.instance) + "# q1=" + std::to_string(red.q1) + " q2=" + std::to_string(red.q2) + "\n";
}

}  // namespace superstab::commands
