#pragma once

// Shared fixtures and test-only brute-force checks. Nothing here calls the
// closure code; these helpers restate definitions literally so they can be
// used as independent references.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superstab/superstab.hpp"

namespace superstab::testing {

inline constexpr const char* kStrictText =
    "doctors: d1 d2\n"
    "hospitals: h1 h2\n"
    "pref d1: h1 h2\n"
    "pref d2: h1 h2\n"
    "pref h1: d1 d2\n"
    "pref h2: d1 d2\n";

inline constexpr const char* kTieText =
    "doctors: d1 d2\n"
    "hospitals: h1 h2\n"
    "pref d1: (h1 h2)\n"
    "pref d2: (h1 h2)\n"
    "pref h1: (d1 d2)\n"
    "pref h2: (d1 d2)\n";

inline constexpr const char* kOneText =
    "doctors: d1\n"
    "hospitals: h1\n"
    "pref d1: h1\n"
    "pref h1: d1\n";

inline Instance strict_instance() { return parse_instance(kStrictText); }
inline Instance tie_instance() { return parse_instance(kTieText); }
inline Instance one_instance() { return parse_instance(kOneText); }

using NamePairs = std::vector<std::pair<std::string, std::string>>;

inline EdgeSet edges_of(const Instance& inst, const NamePairs& pairs) { return inst.edge_set(pairs); }

inline VertexMask hospitals_mask(const Instance& inst, const std::vector<std::string>& names) {
  std::vector<VertexId> v;
  for (const auto& n : names) v.push_back(hospital(n));
  return inst.mask(v);
}

/// Every hospital subset of the instance.
inline std::vector<VertexMask> all_hospital_subsets(const Instance& inst) {
  std::vector<VertexMask> out;
  const std::size_t n = inst.num_hospitals();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexMask m = VertexMask::none(inst);
    for (std::size_t h = 0; h < n; ++h) m.hospitals[h] = (bits >> h) & 1;
    out.push_back(std::move(m));
  }
  return out;
}

/// Super-stability by direct quantifier expansion over name pairs: no pair
/// (d, h) outside mu, both present, such that d ranks h no worse than its
/// partner and h ranks d no worse than its partner (unmatched = worst).
inline bool quantifier_super_stable(const Instance& inst, const VertexMask& removed, const Matching& mu) {
  auto partner_rank = [&](Side side, std::size_t v) -> long long {
    for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
      if (!mu.edges().contains(e)) continue;
      const Edge& edge = inst.edge(e);
      if ((side == Side::Doctor && edge.doctor == v) || (side == Side::Hospital && edge.hospital == v))
        return inst.rank(side, e);
    }
    return 1LL << 40;
  };
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d) {
    if (removed.doctors[d]) continue;
    for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h) {
      if (removed.hospitals[h]) continue;
      auto e = inst.find_edge(d, h);
      if (!e || mu.edges().contains(*e)) continue;
      if (inst.doctor_rank(*e) <= partner_rank(Side::Doctor, d) && inst.hospital_rank(*e) <= partner_rank(Side::Hospital, h))
        return false;
    }
  }
  return true;
}

/// Ch_h by the literal pairwise definition.
inline EdgeSet brute_ch_hospital(const Instance& inst, HospitalIndex h, const EdgeSet& F) {
  EdgeSet out = inst.no_edges();
  for (EdgeIndex e : inst.edges_of_hospital(h)) {
    if (!F.contains(e)) continue;
    bool best = true;
    for (EdgeIndex f : inst.edges_of_hospital(h))
      if (f != e && F.contains(f) && !strictly_prefers(inst, Side::Hospital, e, f)) best = false;
    if (best) out.insert(e);
  }
  return out;
}

inline EdgeSet random_edge_set(const Instance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeSet F = inst.no_edges();
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e)
    if (rng() & 1) F.insert(e);
  return F;
}

/// A seeded spread of generated instances up to the given size.
inline std::vector<Instance> random_instances(std::size_t count, std::size_t max_doctors, std::size_t max_hospitals,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorParams p;
    p.doctors = rng() % (max_doctors + 1);
    p.hospitals = rng() % (max_hospitals + 1);
    p.density = static_cast<double>(rng() % 101) / 100.0;
    p.tie_prob = static_cast<double>(rng() % 101) / 100.0;
    p.seed = rng();
    out.push_back(generate_instance(p));
  }
  return out;
}

}  // namespace superstab::testing
