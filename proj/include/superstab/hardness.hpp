#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "superstab/error.hpp"
#include "superstab/io.hpp"
#include "superstab/model.hpp"
#include "superstab/oracle.hpp"
#include "superstab/superstable.hpp"

// Two-sided deletion: the Minimum Coverage reduction that makes it NP-hard,
// and an exact solver that enumerates doctor deletions only and lets the
// polynomial hospital-side solver finish each residual instance.

namespace superstab {

struct CoverageSet {
  std::string name;
  std::vector<std::string> elements;
};

/// Pick exactly x of the sets so that their union has at most y elements.
struct CoverageInstance {
  std::vector<std::string> ground;
  std::vector<CoverageSet> sets;
  std::size_t x = 0;
  std::size_t y = 0;

  void validate() const {
    std::set<std::string> g;
    for (const auto& s : ground)
      if (!g.insert(s).second) throw InvalidArgument("duplicate ground element '" + s + "'");
    for (const auto& t : sets) {
      std::set<std::string> seen;
      for (const auto& s : t.elements) {
        if (!g.count(s)) throw InvalidArgument("set '" + t.name + "' contains '" + s + "' which is not in the ground set");
        if (!seen.insert(s).second) throw InvalidArgument("set '" + t.name + "' lists '" + s + "' twice");
      }
    }
    if (x > sets.size())
      throw InvalidArgument("x = " + std::to_string(x) + " exceeds the number of sets (" + std::to_string(sets.size()) + ")");
    if (y > ground.size())
      throw InvalidArgument("y = " + std::to_string(y) + " exceeds the ground set size (" +
                            std::to_string(ground.size()) + ")");
  }
};

/// Coverage text format (.cov):
///
///   ground: s1 s2 s3
///   set T1: s1 s3
///   set T2: s2
///   x: 1
///   y: 2
inline CoverageInstance parse_coverage(std::string_view text) {
  CoverageInstance cov;
  bool have_ground = false, have_x = false, have_y = false;
  std::size_t last_line = 0;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    last_line = lineno;
    auto body = detail::strip_comment(lines[i]);
    if (detail::blank(body)) continue;
    auto keyed = detail::split_key(body);
    if (!keyed || keyed->key.empty())
      throw ParseError(lineno, body.find_first_not_of(" \t\r") + 1, "expected 'ground:', 'set <name>:', 'x:' or 'y:'");
    const auto& key = keyed->key;
    auto values = detail::tokenize(keyed->rest, keyed->rest_column);
    for (const auto& tok : values)
      if (tok.text == "(" || tok.text == ")") throw ParseError(lineno, tok.column, "unexpected '" + tok.text + "'");

    auto single = [&]() -> const std::string& {
      if (key.size() != 1) throw ParseError(lineno, key[1].column, "unexpected token before ':'");
      return key[0].text;
    };

    if (key[0].text == "ground") {
      single();
      if (have_ground) throw ParseError(lineno, key[0].column, "duplicate 'ground:' line");
      have_ground = true;
      for (const auto& tok : values) cov.ground.push_back(tok.text);
    } else if (key[0].text == "set") {
      if (key.size() != 2) throw ParseError(lineno, key[0].column, "expected 'set <name>:'");
      for (const auto& t : cov.sets)
        if (t.name == key[1].text) throw ParseError(lineno, key[1].column, "duplicate set '" + key[1].text + "'");
      CoverageSet t{key[1].text, {}};
      for (const auto& tok : values) t.elements.push_back(tok.text);
      cov.sets.push_back(std::move(t));
    } else if (key[0].text == "x" || key[0].text == "y") {
      const bool is_x = single() == "x";
      bool& have = is_x ? have_x : have_y;
      if (have) throw ParseError(lineno, key[0].column, "duplicate '" + key[0].text + ":' line");
      have = true;
      if (values.size() != 1) throw ParseError(lineno, keyed->rest_column, "expected one non-negative integer");
      std::size_t v = 0;
      const auto& s = values[0].text;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(lineno, values[0].column, "expected a non-negative integer, got '" + s + "'");
      (is_x ? cov.x : cov.y) = v;
    } else {
      throw ParseError(lineno, key[0].column, "unknown directive '" + key[0].text + "'");
    }
  }
  if (!have_ground) throw ParseError(last_line, 0, "missing 'ground:' line");
  if (!have_x) throw ParseError(last_line, 0, "missing 'x:' line");
  if (!have_y) throw ParseError(last_line, 0, "missing 'y:' line");
  try {
    cov.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(last_line, 0, e.what());
  }
  return cov;
}

struct ReductionOutput {
  Instance instance;
  std::size_t q1 = 0;
  std::size_t q2 = 0;
  std::vector<std::string> doctor_of;   // set i -> doctor "T<i+1>"
  std::vector<std::string> slot_of;     // set i -> private hospital "t<i+1>"
  std::vector<std::string> element_of;  // ground element j -> hospital "s<j+1>"
};

/// Builds the deletion instance: one doctor T_i per set, one hospital s_j per
/// ground element and a private hospital t_i per set, edges (T_i, s_j) for
/// s_j ∈ T_i plus (T_i, t_i), every vertex indifferent between all its edges,
/// and budgets q1 = m - x, q2 = y. Vertices are named by position, not by the
/// names used in the coverage instance.
inline ReductionOutput reduce_min_coverage(const CoverageInstance& cov) {
  cov.validate();
  ReductionOutput out;
  const std::size_t n = cov.ground.size();
  const std::size_t m = cov.sets.size();
  for (std::size_t i = 0; i < m; ++i) {
    out.doctor_of.push_back("T" + std::to_string(i + 1));
    out.slot_of.push_back("t" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < n; ++j) out.element_of.push_back("s" + std::to_string(j + 1));

  InstanceBuilder b;
  for (const auto& d : out.doctor_of) b.add_doctor(d);
  for (const auto& s : out.element_of) b.add_hospital(s);
  for (const auto& t : out.slot_of) b.add_hospital(t);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& T = out.doctor_of[i];
    for (const auto& elem : cov.sets[i].elements) {
      auto j = static_cast<std::size_t>(std::find(cov.ground.begin(), cov.ground.end(), elem) - cov.ground.begin());
      b.rank(doctor(T), out.element_of[j], 1);
      b.rank(hospital(out.element_of[j]), T, 1);
    }
    b.rank(doctor(T), out.slot_of[i], 1);
    b.rank(hospital(out.slot_of[i]), T, 1);
  }
  out.instance = b.build();
  out.q1 = m - cov.x;
  out.q2 = cov.y;
  return out;
}

/// Brute force: is there I ⊆ [m] with |I| = x and |∪_{i∈I} T_i| <= y?
inline bool oracle_min_coverage(const CoverageInstance& cov, std::size_t max_sets = 20) {
  cov.validate();
  if (cov.sets.size() > max_sets)
    throw CapExceeded("coverage oracle cap exceeded: " + std::to_string(cov.sets.size()) + " > " +
                      std::to_string(max_sets));
  bool found = false;
  detail::for_each_subset(cov.sets.size(), cov.x, [&](const std::vector<std::size_t>& pick) {
    if (pick.size() != cov.x) return true;
    std::set<std::string> covered;
    for (std::size_t i : pick) covered.insert(cov.sets[i].elements.begin(), cov.sets[i].elements.end());
    found = covered.size() <= cov.y;
    return !found;
  });
  return found;
}

/// Exact two-sided deletion: some X with |X ∩ D| <= q1, |X ∩ H| <= q2 whose
/// removal admits a super-stable matching, or nullopt. Doctor subsets are
/// tried by size, then by sorted names; each residual instance gets its
/// minimum hospital deletion, and the first one within q2 is returned.
inline std::optional<VertexMask> solve_problem2_exact(const Instance& inst, std::size_t q1, std::size_t q2,
                                                      std::size_t max_doctors = 20) {
  if (inst.num_doctors() > max_doctors)
    throw CapExceeded("doctor subset cap exceeded: " + std::to_string(inst.num_doctors()) + " > " +
                      std::to_string(max_doctors));
  const auto order = detail::order_by_name(inst.doctors());
  std::optional<VertexMask> found;
  detail::for_each_subset(order.size(), q1, [&](const std::vector<std::size_t>& pick) {
    VertexMask x = VertexMask::none(inst);
    for (std::size_t i : pick) x.doctors[order[i]] = true;
    const Instance residual = induced_instance(inst, x);
    const DeletionCertificate cert = solve_min_hospital_deletion(residual);
    if (cert.deletions() > q2) return true;
    for (HospitalIndex h = 0; h < residual.num_hospitals(); ++h)
      if (cert.critical.hospitals[h]) x.hospitals[*inst.find_hospital(residual.hospitals()[h])] = true;
    found = std::move(x);
    return false;
  });
  return found;
}

}  // namespace superstab
