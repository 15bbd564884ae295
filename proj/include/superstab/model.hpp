#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superstab/error.hpp"

// Bipartite preference instances with ties: doctors on one side, hospitals on
// the other, each vertex holding a weak order (integer ranks, equal = tie) over
// its incident edges. Everything here is immutable once built.

namespace superstab {

enum class Side { Doctor, Hospital };

inline const char* to_string(Side side) { return side == Side::Doctor ? "doctor" : "hospital"; }

struct VertexId {
  Side side = Side::Doctor;
  std::string name;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline VertexId doctor(std::string name) { return {Side::Doctor, std::move(name)}; }
inline VertexId hospital(std::string name) { return {Side::Hospital, std::move(name)}; }

using EdgeIndex = std::size_t;
using DoctorIndex = std::size_t;
using HospitalIndex = std::size_t;

struct Edge {
  DoctorIndex doctor = 0;
  HospitalIndex hospital = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Rank standing in for "unmatched": every ranked edge beats it.
inline constexpr int kUnmatchedRank = std::numeric_limits<int>::max();

/// A subset of the edges of one instance, stored as a membership mask over
/// edge indices. Iteration follows edge index order, which is the instance's
/// canonical (doctor name, hospital name) order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : bits_(universe, false) {}

  static EdgeSet full(std::size_t universe) {
    EdgeSet s;
    s.bits_.assign(universe, true);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(EdgeIndex e) const { return e < bits_.size() && bits_[e]; }
  void insert(EdgeIndex e) { bits_.at(e) = true; }
  void erase(EdgeIndex e) { bits_.at(e) = false; }

  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
  bool empty() const { return std::find(bits_.begin(), bits_.end(), true) == bits_.end(); }

  std::vector<EdgeIndex> members() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < bits_.size(); ++e)
      if (bits_[e]) out.push_back(e);
    return out;
  }

  bool subset_of(const EdgeSet& other) const {
    check_same_universe(other);
    for (EdgeIndex e = 0; e < bits_.size(); ++e)
      if (bits_[e] && !other.bits_[e]) return false;
    return true;
  }

  bool disjoint_from(const EdgeSet& other) const {
    check_same_universe(other);
    for (EdgeIndex e = 0; e < bits_.size(); ++e)
      if (bits_[e] && other.bits_[e]) return false;
    return true;
  }

  EdgeSet& operator|=(const EdgeSet& other) {
    check_same_universe(other);
    for (EdgeIndex e = 0; e < bits_.size(); ++e) bits_[e] = bits_[e] || other.bits_[e];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& other) {
    check_same_universe(other);
    for (EdgeIndex e = 0; e < bits_.size(); ++e) bits_[e] = bits_[e] && other.bits_[e];
    return *this;
  }
  EdgeSet& operator-=(const EdgeSet& other) {
    check_same_universe(other);
    for (EdgeIndex e = 0; e < bits_.size(); ++e) bits_[e] = bits_[e] && !other.bits_[e];
    return *this;
  }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  /// Complement within the universe.
  EdgeSet complement() const {
    EdgeSet out(*this);
    out.bits_.flip();
    return out;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  void check_same_universe(const EdgeSet& other) const {
    if (other.bits_.size() != bits_.size()) throw InvalidArgument("edge sets belong to different instances");
  }

  std::vector<bool> bits_;
};

class Instance;

/// Vertices selected for deletion (or any other vertex subset), one flag per
/// doctor and per hospital.
struct VertexMask {
  std::vector<bool> doctors;
  std::vector<bool> hospitals;

  static VertexMask none(const Instance& inst);

  std::size_t doctor_count() const { return static_cast<std::size_t>(std::count(doctors.begin(), doctors.end(), true)); }
  std::size_t hospital_count() const {
    return static_cast<std::size_t>(std::count(hospitals.begin(), hospitals.end(), true));
  }
  std::size_t count() const { return doctor_count() + hospital_count(); }
  bool empty() const { return count() == 0; }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;
};

class InstanceBuilder;

/// A bipartite graph G = (D ∪ H, E) together with one weak preference order
/// per vertex. Doctors and hospitals keep their declaration order; edges are
/// indexed in lexicographic (doctor name, hospital name) order.
class Instance {
 public:
  Instance() = default;

  std::span<const std::string> doctors() const { return doctors_; }
  std::span<const std::string> hospitals() const { return hospitals_; }
  std::size_t num_doctors() const { return doctors_.size(); }
  std::size_t num_hospitals() const { return hospitals_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edges in increasing edge index order.
  std::span<const EdgeIndex> edges_of_doctor(DoctorIndex d) const { return doctor_edges_.at(d); }
  std::span<const EdgeIndex> edges_of_hospital(HospitalIndex h) const { return hospital_edges_.at(h); }

  /// Rank of edge e in its doctor's (resp. hospital's) order; 1 is best.
  int doctor_rank(EdgeIndex e) const { return doctor_rank_.at(e); }
  int hospital_rank(EdgeIndex e) const { return hospital_rank_.at(e); }
  int rank(Side side, EdgeIndex e) const { return side == Side::Doctor ? doctor_rank(e) : hospital_rank(e); }

  const std::string& doctor_name(EdgeIndex e) const { return doctors_[edge(e).doctor]; }
  const std::string& hospital_name(EdgeIndex e) const { return hospitals_[edge(e).hospital]; }

  std::optional<DoctorIndex> find_doctor(std::string_view name) const { return find(doctor_index_, name); }
  std::optional<HospitalIndex> find_hospital(std::string_view name) const { return find(hospital_index_, name); }

  std::optional<EdgeIndex> find_edge(DoctorIndex d, HospitalIndex h) const {
    for (EdgeIndex e : edges_of_doctor(d))
      if (edges_[e].hospital == h) return e;
    return std::nullopt;
  }
  std::optional<EdgeIndex> find_edge(std::string_view d, std::string_view h) const {
    auto di = find_doctor(d);
    auto hi = find_hospital(h);
    if (!di || !hi) return std::nullopt;
    return find_edge(*di, *hi);
  }

  EdgeSet no_edges() const { return EdgeSet(num_edges()); }
  EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }

  /// Edge set from (doctor, hospital) name pairs; throws on a pair that is not an edge.
  EdgeSet edge_set(const std::vector<std::pair<std::string, std::string>>& pairs) const {
    EdgeSet out = no_edges();
    for (const auto& [d, h] : pairs) {
      auto e = find_edge(d, h);
      if (!e) throw InvalidArgument("(" + d + ", " + h + ") is not an edge");
      out.insert(*e);
    }
    return out;
  }

  /// Mask of the named vertices; unknown names are an error.
  VertexMask mask(std::span<const VertexId> vertices) const {
    VertexMask m = VertexMask::none(*this);
    for (const auto& v : vertices) {
      if (v.side == Side::Doctor) {
        auto d = find_doctor(v.name);
        if (!d) throw InvalidArgument("unknown doctor '" + v.name + "'");
        m.doctors[*d] = true;
      } else {
        auto h = find_hospital(v.name);
        if (!h) throw InvalidArgument("unknown hospital '" + v.name + "'");
        m.hospitals[*h] = true;
      }
    }
    return m;
  }

  /// Selected vertices, doctors first, each side sorted by name.
  std::vector<VertexId> vertices(const VertexMask& m) const {
    std::vector<VertexId> out;
    for (DoctorIndex d = 0; d < num_doctors(); ++d)
      if (m.doctors.at(d)) out.push_back(doctor(doctors_[d]));
    for (HospitalIndex h = 0; h < num_hospitals(); ++h)
      if (m.hospitals.at(h)) out.push_back(hospital(hospitals_[h]));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// E(X) for a vertex set X: all edges with an endpoint in X.
  EdgeSet incident_edges(const VertexMask& m) const {
    check_mask(m);
    EdgeSet out = no_edges();
    for (EdgeIndex e = 0; e < num_edges(); ++e)
      if (m.doctors[edges_[e].doctor] || m.hospitals[edges_[e].hospital]) out.insert(e);
    return out;
  }

  void check_mask(const VertexMask& m) const {
    if (m.doctors.size() != num_doctors() || m.hospitals.size() != num_hospitals())
      throw InvalidArgument("vertex set does not belong to this instance");
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.doctors_ == b.doctors_ && a.hospitals_ == b.hospitals_ && a.edges_ == b.edges_ &&
           a.doctor_rank_ == b.doctor_rank_ && a.hospital_rank_ == b.hospital_rank_;
  }

 private:
  friend class InstanceBuilder;

  static std::optional<std::size_t> find(const std::map<std::string, std::size_t, std::less<>>& index,
                                         std::string_view name) {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> doctors_;
  std::vector<std::string> hospitals_;
  std::map<std::string, std::size_t, std::less<>> doctor_index_;
  std::map<std::string, std::size_t, std::less<>> hospital_index_;
  std::vector<Edge> edges_;
  std::vector<int> doctor_rank_;
  std::vector<int> hospital_rank_;
  std::vector<std::vector<EdgeIndex>> doctor_edges_;
  std::vector<std::vector<EdgeIndex>> hospital_edges_;
};

inline VertexMask VertexMask::none(const Instance& inst) {
  return {std::vector<bool>(inst.num_doctors(), false), std::vector<bool>(inst.num_hospitals(), false)};
}

/// True if the token can name a vertex in the text format.
inline bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return false;
    if (c == '(' || c == ')' || c == '#' || c == ':') return false;
  }
  return true;
}

/// Assembles an Instance from vertex declarations and per-vertex ranks.
/// build() enforces mutual acceptability: an edge exists iff both endpoints
/// rank each other, and a one-sided listing is an error.
class InstanceBuilder {
 public:
  InstanceBuilder& add_doctor(std::string name) { return add(Side::Doctor, std::move(name)); }
  InstanceBuilder& add_hospital(std::string name) { return add(Side::Hospital, std::move(name)); }

  InstanceBuilder& rank(const VertexId& owner, const std::string& other, int rank) {
    if (rank < 1) throw InvalidArgument("rank must be positive");
    auto& prefs = side_prefs(owner.side);
    auto it = prefs.find(owner.name);
    if (it == prefs.end()) throw InvalidArgument("unknown " + std::string(to_string(owner.side)) + " '" + owner.name + "'");
    if (!it->second.emplace(other, rank).second)
      throw InvalidArgument("'" + other + "' listed twice by '" + owner.name + "'");
    return *this;
  }

  /// Groups run best to worst; members of one group are tied.
  InstanceBuilder& preferences(const VertexId& owner, const std::vector<std::vector<std::string>>& groups) {
    int r = 0;
    for (const auto& group : groups) {
      ++r;
      for (const auto& other : group) rank(owner, other, r);
    }
    return *this;
  }

  Instance build() const {
    Instance inst;
    inst.doctors_ = doctors_;
    inst.hospitals_ = hospitals_;
    for (std::size_t i = 0; i < doctors_.size(); ++i) inst.doctor_index_.emplace(doctors_[i], i);
    for (std::size_t i = 0; i < hospitals_.size(); ++i) inst.hospital_index_.emplace(hospitals_[i], i);

    for (const auto& [h, prefs] : hospital_prefs_)
      for (const auto& [d, r] : prefs) {
        auto dit = doctor_prefs_.find(d);
        if (dit == doctor_prefs_.end()) throw InvalidArgument("hospital '" + h + "' lists unknown doctor '" + d + "'");
        if (!dit->second.count(h))
          throw InvalidArgument("hospital '" + h + "' lists '" + d + "' but doctor '" + d + "' does not list '" + h + "'");
      }

    // Both maps are name-ordered, so edges come out in canonical order.
    for (const auto& [d, prefs] : doctor_prefs_)
      for (const auto& [h, r] : prefs) {
        auto hit = hospital_prefs_.find(h);
        if (hit == hospital_prefs_.end()) throw InvalidArgument("doctor '" + d + "' lists unknown hospital '" + h + "'");
        auto back = hit->second.find(d);
        if (back == hit->second.end())
          throw InvalidArgument("doctor '" + d + "' lists '" + h + "' but hospital '" + h + "' does not list '" + d + "'");
        inst.edges_.push_back({inst.doctor_index_.at(d), inst.hospital_index_.at(h)});
        inst.doctor_rank_.push_back(r);
        inst.hospital_rank_.push_back(back->second);
      }

    inst.doctor_edges_.resize(doctors_.size());
    inst.hospital_edges_.resize(hospitals_.size());
    for (EdgeIndex e = 0; e < inst.edges_.size(); ++e) {
      inst.doctor_edges_[inst.edges_[e].doctor].push_back(e);
      inst.hospital_edges_[inst.edges_[e].hospital].push_back(e);
    }
    return inst;
  }

 private:
  using PrefMap = std::map<std::string, std::map<std::string, int>>;

  InstanceBuilder& add(Side side, std::string name) {
    if (!valid_vertex_name(name)) throw InvalidArgument("invalid vertex name '" + name + "'");
    if (doctor_prefs_.count(name) || hospital_prefs_.count(name))
      throw InvalidArgument("duplicate vertex name '" + name + "'");
    side_prefs(side).emplace(name, std::map<std::string, int>{});
    (side == Side::Doctor ? doctors_ : hospitals_).push_back(std::move(name));
    return *this;
  }

  PrefMap& side_prefs(Side side) { return side == Side::Doctor ? doctor_prefs_ : hospital_prefs_; }

  std::vector<std::string> doctors_;
  std::vector<std::string> hospitals_;
  PrefMap doctor_prefs_;
  PrefMap hospital_prefs_;
};

/// Weak preference of the vertex on `side` shared by e and f; nullopt stands
/// for being unmatched, which every edge strictly beats.
inline bool weakly_prefers(const Instance& inst, Side side, std::optional<EdgeIndex> e, std::optional<EdgeIndex> f) {
  int re = e ? inst.rank(side, *e) : kUnmatchedRank;
  int rf = f ? inst.rank(side, *f) : kUnmatchedRank;
  if (!e) return !f;
  return re <= rf;
}

inline bool strictly_prefers(const Instance& inst, Side side, std::optional<EdgeIndex> e, std::optional<EdgeIndex> f) {
  return weakly_prefers(inst, side, e, f) && !weakly_prefers(inst, side, f, e);
}

// ---------------------------------------------------------------------------
// Choice functions
// ---------------------------------------------------------------------------

/// All edges of F(d) that d weakly prefers to every edge of F(d).
inline EdgeSet ch_doctor(const Instance& inst, DoctorIndex d, const EdgeSet& F) {
  EdgeSet out = inst.no_edges();
  int best = kUnmatchedRank;
  for (EdgeIndex e : inst.edges_of_doctor(d))
    if (F.contains(e)) best = std::min(best, inst.doctor_rank(e));
  for (EdgeIndex e : inst.edges_of_doctor(d))
    if (F.contains(e) && inst.doctor_rank(e) == best) out.insert(e);
  return out;
}

/// The edge of F(h) strictly preferred by h to every other edge of F(h);
/// empty when F(h) is empty or its top is tied.
inline EdgeSet ch_hospital(const Instance& inst, HospitalIndex h, const EdgeSet& F) {
  EdgeSet out = inst.no_edges();
  std::optional<EdgeIndex> top;
  bool tied = false;
  for (EdgeIndex e : inst.edges_of_hospital(h)) {
    if (!F.contains(e)) continue;
    if (!top || inst.hospital_rank(e) < inst.hospital_rank(*top)) {
      top = e;
      tied = false;
    } else if (inst.hospital_rank(e) == inst.hospital_rank(*top)) {
      tied = true;
    }
  }
  if (top && !tied) out.insert(*top);
  return out;
}

inline EdgeSet ch_all_doctors(const Instance& inst, const EdgeSet& F) {
  EdgeSet out = inst.no_edges();
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d) out |= ch_doctor(inst, d, F);
  return out;
}

inline EdgeSet ch_all_hospitals(const Instance& inst, const EdgeSet& F) {
  EdgeSet out = inst.no_edges();
  for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h) out |= ch_hospital(inst, h, F);
  return out;
}

/// D[F]: doctors with at least one edge in F, in index order.
inline std::vector<DoctorIndex> doctors_with_edges(const Instance& inst, const EdgeSet& F) {
  std::vector<DoctorIndex> out;
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d) {
    auto es = inst.edges_of_doctor(d);
    if (std::any_of(es.begin(), es.end(), [&](EdgeIndex e) { return F.contains(e); })) out.push_back(d);
  }
  return out;
}

/// Restriction F(X) of an edge set to the edges incident to X.
inline EdgeSet restrict_to(const Instance& inst, const EdgeSet& F, const VertexMask& X) {
  return F & inst.incident_edges(X);
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

class Matching {
 public:
  Matching() = default;
  explicit Matching(const Instance& inst)
      : edges_(inst.num_edges()), doctor_(inst.num_doctors()), hospital_(inst.num_hospitals()) {}

  /// Throws InvalidArgument when two edges share a vertex.
  static Matching from_edges(const Instance& inst, std::span<const EdgeIndex> edges) {
    Matching m(inst);
    for (EdgeIndex e : edges) m.insert(inst, e);
    return m;
  }
  static Matching from_edges(const Instance& inst, const EdgeSet& edges) {
    auto members = edges.members();
    return from_edges(inst, members);
  }

  void insert(const Instance& inst, EdgeIndex e) {
    const Edge& edge = inst.edge(e);
    if (doctor_.at(edge.doctor) || hospital_.at(edge.hospital))
      throw InvalidArgument("(" + inst.doctor_name(e) + ", " + inst.hospital_name(e) +
                            ") conflicts with an edge already in the matching");
    doctor_[edge.doctor] = e;
    hospital_[edge.hospital] = e;
    edges_.insert(e);
  }

  void erase(const Instance& inst, EdgeIndex e) {
    if (!edges_.contains(e)) return;
    doctor_[inst.edge(e).doctor].reset();
    hospital_[inst.edge(e).hospital].reset();
    edges_.erase(e);
  }

  std::optional<EdgeIndex> of_doctor(DoctorIndex d) const { return doctor_.at(d); }
  std::optional<EdgeIndex> of_hospital(HospitalIndex h) const { return hospital_.at(h); }
  std::optional<EdgeIndex> of(Side side, std::size_t v) const {
    return side == Side::Doctor ? of_doctor(v) : of_hospital(v);
  }

  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  EdgeSet edges_;
  std::vector<std::optional<EdgeIndex>> doctor_;
  std::vector<std::optional<EdgeIndex>> hospital_;
};

/// Matching given by name pairs.
inline Matching matching_from_names(const Instance& inst, const std::vector<std::pair<std::string, std::string>>& pairs) {
  return Matching::from_edges(inst, inst.edge_set(pairs));
}

inline std::vector<std::pair<std::string, std::string>> edge_names(const Instance& inst, const EdgeSet& F) {
  std::vector<std::pair<std::string, std::string>> out;
  for (EdgeIndex e : F.members()) out.emplace_back(inst.doctor_name(e), inst.hospital_name(e));
  return out;
}

/// Re-expresses a matching of one instance in another by edge names, e.g.
/// lifting a matching of an induced instance back to its parent.
inline Matching translate(const Matching& m, const Instance& from, const Instance& to) {
  auto names = edge_names(from, m.edges());
  return matching_from_names(to, names);
}

// ---------------------------------------------------------------------------
// Induced instances and blocking
// ---------------------------------------------------------------------------

/// G<V \ X>: the instance with the vertices of X removed. Surviving ranks keep
/// their values, so relative orders (and ties) are unchanged.
inline Instance induced_instance(const Instance& inst, const VertexMask& removed) {
  inst.check_mask(removed);
  InstanceBuilder b;
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d)
    if (!removed.doctors[d]) b.add_doctor(inst.doctors()[d]);
  for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h)
    if (!removed.hospitals[h]) b.add_hospital(inst.hospitals()[h]);
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    if (removed.doctors[edge.doctor] || removed.hospitals[edge.hospital]) continue;
    b.rank(doctor(inst.doctor_name(e)), inst.hospital_name(e), inst.doctor_rank(e));
    b.rank(hospital(inst.hospital_name(e)), inst.doctor_name(e), inst.hospital_rank(e));
  }
  return b.build();
}

inline Instance induced_instance(const Instance& inst, std::span<const VertexId> removed) {
  return induced_instance(inst, inst.mask(removed));
}

/// Swaps the roles of doctors and hospitals, carrying every order across.
inline Instance transpose(const Instance& inst) {
  InstanceBuilder b;
  for (const auto& h : inst.hospitals()) b.add_doctor(h);
  for (const auto& d : inst.doctors()) b.add_hospital(d);
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    b.rank(doctor(inst.hospital_name(e)), inst.doctor_name(e), inst.hospital_rank(e));
    b.rank(hospital(inst.doctor_name(e)), inst.hospital_name(e), inst.doctor_rank(e));
  }
  return b.build();
}

/// Edges of E<V \ X> \ mu that both endpoints weakly prefer to their current
/// assignment. Throws if mu uses a vertex of X.
inline EdgeSet blocking_edges(const Instance& inst, const VertexMask& removed, const Matching& mu) {
  inst.check_mask(removed);
  if (mu.edges().universe() != inst.num_edges()) throw InvalidArgument("matching does not belong to this instance");
  for (EdgeIndex e : mu.edges().members()) {
    const Edge& edge = inst.edge(e);
    if (removed.doctors[edge.doctor] || removed.hospitals[edge.hospital])
      throw InvalidArgument("matching uses deleted vertex on edge (" + inst.doctor_name(e) + ", " +
                            inst.hospital_name(e) + ")");
  }
  EdgeSet out = inst.no_edges();
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    const Edge& edge = inst.edge(e);
    if (removed.doctors[edge.doctor] || removed.hospitals[edge.hospital] || mu.edges().contains(e)) continue;
    if (weakly_prefers(inst, Side::Doctor, e, mu.of_doctor(edge.doctor)) &&
        weakly_prefers(inst, Side::Hospital, e, mu.of_hospital(edge.hospital)))
      out.insert(e);
  }
  return out;
}

inline bool is_super_stable(const Instance& inst, const VertexMask& removed, const Matching& mu) {
  return blocking_edges(inst, removed, mu).empty();
}

inline bool is_super_stable(const Instance& inst, const Matching& mu) {
  return is_super_stable(inst, VertexMask::none(inst), mu);
}

}  // namespace superstab
