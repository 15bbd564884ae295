#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superstab/error.hpp"
#include "superstab/model.hpp"

// Exhaustive ground truth for desk-scale instances. Nothing here uses the
// closure machinery: matchings are enumerated outright and tested against the
// definition of super-stability, and deletion sets are searched subset by
// subset.

namespace superstab {

struct OracleLimits {
  std::size_t max_edges = 20;      // edges of the graph being enumerated
  std::size_t max_hospitals = 12;  // minimum hospital deletion
  std::size_t max_vertices = 14;   // two-sided deletion search

  /// Defaults overridden by SUPERSTAB_ORACLE_CAP, which is either a single
  /// integer applied to every cap or a list like "edges=30,hospitals=10".
  static OracleLimits from_env() {
    OracleLimits limits;
    if (const char* env = std::getenv("SUPERSTAB_ORACLE_CAP")) limits = parse(env);
    return limits;
  }

  static OracleLimits parse(std::string_view text) {
    OracleLimits limits;
    auto number = [&](std::string_view s) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InvalidArgument("bad oracle cap '" + std::string(text) + "'");
      return v;
    };
    if (text.find('=') == std::string_view::npos) {
      limits.max_edges = limits.max_hospitals = limits.max_vertices = number(text);
      return limits;
    }
    while (!text.empty()) {
      auto comma = text.find(',');
      auto item = text.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InvalidArgument("bad oracle cap '" + std::string(item) + "'");
      auto key = item.substr(0, eq);
      auto value = number(item.substr(eq + 1));
      if (key == "edges")
        limits.max_edges = value;
      else if (key == "hospitals")
        limits.max_hospitals = value;
      else if (key == "vertices")
        limits.max_vertices = value;
      else
        throw InvalidArgument("unknown oracle cap '" + std::string(key) + "'");
      text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    }
    return limits;
  }
};

namespace detail {

/// Depth-first enumeration of the matchings of G<V \ X>: doctor by doctor,
/// each either stays single or takes a free hospital.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const Instance& inst, const VertexMask& removed)
      : inst_(inst),
        removed_(removed),
        doctor_(inst.num_doctors()),
        hospital_(inst.num_hospitals()) {
    inst.check_mask(removed);
    for (DoctorIndex d = 0; d < inst.num_doctors(); ++d)
      if (!removed.doctors[d]) active_.push_back(d);
    for (EdgeIndex e = 0; e < inst.num_edges(); ++e)
      if (alive(e)) live_edges_.push_back(e);
  }

  std::size_t live_edges() const { return live_edges_.size(); }

  /// Calls visit(*this) on each matching until it returns false. Returns the
  /// number of matchings visited.
  template <class Visit>
  std::size_t run(Visit&& visit) {
    visited_ = 0;
    stop_ = false;
    descend(0, visit);
    return visited_;
  }

  bool super_stable() const {
    for (EdgeIndex e : live_edges_) {
      const Edge& edge = inst_.edge(e);
      const auto& md = doctor_[edge.doctor];
      if (md == e) continue;
      const int rd = md ? inst_.doctor_rank(*md) : kUnmatchedRank;
      const auto& mh = hospital_[edge.hospital];
      const int rh = mh ? inst_.hospital_rank(*mh) : kUnmatchedRank;
      if (inst_.doctor_rank(e) <= rd && inst_.hospital_rank(e) <= rh) return false;
    }
    return true;
  }

  Matching current() const {
    Matching m(inst_);
    for (const auto& e : doctor_)
      if (e) m.insert(inst_, *e);
    return m;
  }

 private:
  bool alive(EdgeIndex e) const {
    const Edge& edge = inst_.edge(e);
    return !removed_.doctors[edge.doctor] && !removed_.hospitals[edge.hospital];
  }

  template <class Visit>
  void descend(std::size_t i, Visit& visit) {
    if (stop_) return;
    if (i == active_.size()) {
      ++visited_;
      if (!visit(*this)) stop_ = true;
      return;
    }
    const DoctorIndex d = active_[i];
    descend(i + 1, visit);
    for (EdgeIndex e : inst_.edges_of_doctor(d)) {
      const HospitalIndex h = inst_.edge(e).hospital;
      if (removed_.hospitals[h] || hospital_[h]) continue;
      doctor_[d] = e;
      hospital_[h] = e;
      descend(i + 1, visit);
      doctor_[d].reset();
      hospital_[h].reset();
      if (stop_) return;
    }
  }

  const Instance& inst_;
  const VertexMask& removed_;
  std::vector<DoctorIndex> active_;
  std::vector<EdgeIndex> live_edges_;
  std::vector<std::optional<EdgeIndex>> doctor_;
  std::vector<std::optional<EdgeIndex>> hospital_;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

/// First-found super-stable matching of G<V \ X>, no cap applied.
inline std::optional<Matching> find_super_stable(const Instance& inst, const VertexMask& removed) {
  MatchingEnumerator en(inst, removed);
  std::optional<Matching> found;
  en.run([&](const MatchingEnumerator& m) {
    if (!m.super_stable()) return true;
    found = m.current();
    return false;
  });
  return found;
}

/// Calls visit(indices) for every subset of {0..n-1} with at most max_size
/// elements, by increasing size and lexicographically within a size, until
/// visit returns false.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t max_size, Visit&& visit) {
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (!visit(pick)) return false;
      // next k-combination
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

template <class Names>
std::vector<std::size_t> order_by_name(const Names& names) {
  std::vector<std::size_t> idx(names.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  return idx;
}

}  // namespace detail

/// Every matching of G<V \ X>, in enumeration order.
inline std::vector<Matching> enumerate_matchings(const Instance& inst, const VertexMask& removed,
                                                 const OracleLimits& limits = {}) {
  detail::MatchingEnumerator en(inst, removed);
  if (en.live_edges() > limits.max_edges)
    throw CapExceeded("oracle edge cap exceeded: " + std::to_string(en.live_edges()) + " > " +
                      std::to_string(limits.max_edges));
  std::vector<Matching> out;
  en.run([&](const detail::MatchingEnumerator& m) {
    out.push_back(m.current());
    return true;
  });
  return out;
}

/// Every super-stable matching of G<V \ X>, in enumeration order. When
/// search_space is given it receives the number of matchings examined.
inline std::vector<Matching> enumerate_super_stable(const Instance& inst, const VertexMask& removed,
                                                    const OracleLimits& limits = {},
                                                    std::size_t* search_space = nullptr) {
  detail::MatchingEnumerator en(inst, removed);
  if (en.live_edges() > limits.max_edges)
    throw CapExceeded("oracle edge cap exceeded: " + std::to_string(en.live_edges()) + " > " +
                      std::to_string(limits.max_edges));
  std::vector<Matching> out;
  std::size_t n = en.run([&](const detail::MatchingEnumerator& m) {
    if (m.super_stable()) out.push_back(m.current());
    return true;
  });
  if (search_space) *search_space = n;
  return out;
}

inline std::vector<Matching> enumerate_super_stable(const Instance& inst, const OracleLimits& limits = {}) {
  return enumerate_super_stable(inst, VertexMask::none(inst), limits);
}

struct MinHospitalDeletion {
  std::size_t size = 0;
  VertexMask witness;
};

/// Smallest hospital set whose deletion admits a super-stable matching;
/// the witness is the first such set by size, then by sorted hospital names.
inline MinHospitalDeletion oracle_min_hospital_deletion(const Instance& inst, const OracleLimits& limits = {}) {
  if (inst.num_hospitals() > limits.max_hospitals)
    throw CapExceeded("oracle hospital cap exceeded: " + std::to_string(inst.num_hospitals()) + " > " +
                      std::to_string(limits.max_hospitals));
  const auto order = detail::order_by_name(inst.hospitals());
  std::optional<MinHospitalDeletion> best;
  detail::for_each_subset(order.size(), order.size(), [&](const std::vector<std::size_t>& pick) {
    VertexMask x = VertexMask::none(inst);
    for (std::size_t i : pick) x.hospitals[order[i]] = true;
    if (!detail::find_super_stable(inst, x)) return true;
    best = MinHospitalDeletion{pick.size(), std::move(x)};
    return false;
  });
  // Deleting every hospital always works, so best is set.
  return *best;
}

/// Some X with |X ∩ D| <= q1 and |X ∩ H| <= q2 leaving a super-stable
/// matching, or nullopt. Subsets are tried by size, then lexicographically
/// over doctors-then-hospitals, each side sorted by name.
inline std::optional<VertexMask> oracle_problem2(const Instance& inst, std::size_t q1, std::size_t q2,
                                                 const OracleLimits& limits = {}) {
  const std::size_t n = inst.num_doctors() + inst.num_hospitals();
  if (n > limits.max_vertices)
    throw CapExceeded("oracle vertex cap exceeded: " + std::to_string(n) + " > " +
                      std::to_string(limits.max_vertices));
  const auto dorder = detail::order_by_name(inst.doctors());
  const auto horder = detail::order_by_name(inst.hospitals());
  const std::size_t nd = dorder.size();
  std::optional<VertexMask> found;
  detail::for_each_subset(n, q1 + q2, [&](const std::vector<std::size_t>& pick) {
    std::size_t doctors = 0;
    for (std::size_t i : pick) doctors += i < nd;
    if (doctors > q1 || pick.size() - doctors > q2) return true;
    VertexMask x = VertexMask::none(inst);
    for (std::size_t i : pick) {
      if (i < nd)
        x.doctors[dorder[i]] = true;
      else
        x.hospitals[horder[i - nd]] = true;
    }
    if (!detail::find_super_stable(inst, x)) return true;
    found = std::move(x);
    return false;
  });
  return found;
}

struct OracleReport {
  std::vector<Matching> all_super_stable;
  MinHospitalDeletion min_hospital_deletion;
  std::size_t search_space = 0;
};

inline OracleReport oracle_report(const Instance& inst, const OracleLimits& limits = {}) {
  OracleReport r;
  r.all_super_stable = enumerate_super_stable(inst, VertexMask::none(inst), limits, &r.search_space);
  r.min_hospital_deletion = oracle_min_hospital_deletion(inst, limits);
  return r;
}

}  // namespace superstab
