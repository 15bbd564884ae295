#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superstab/error.hpp"
#include "superstab/model.hpp"

// Forbidden-edge closure for super-stability and the exact minimum
// hospital-deletion solver built on it.
//
// Starting from R_0 = E(X) for a set X of deleted hospitals, each round takes
// the doctors' weakly-best remaining edges P, keeps those that their hospital
// strictly prefers over every other candidate or already-forbidden edge (Q),
// and forbids the rest: R_t = R_{t-1} ∪ (P \ Q). The fixed point B_X contains
// no edge of any super-stable matching of G<V \ X>, and B_∅ ⊆ B_X. Matching
// every doctor to a surviving top choice yields μ_X; the hospitals left
// unmatched by μ_∅ that still touch a forbidden or top-choice edge are exactly
// a minimum set of hospitals whose deletion restores super-stability.

namespace superstab {

struct ClosureStep {
  std::size_t t = 0;
  EdgeSet candidates;  // P_t
  EdgeSet accepted;    // Q_t
  EdgeSet forbidden;   // R_t
};

struct ClosureTrace {
  EdgeSet initial;  // R_0 = E(X)
  std::vector<ClosureStep> steps;
  std::size_t iterations = 0;  // k_X; the last step repeats R_{k-1}

  /// R_t for t in [0, k].
  const EdgeSet& forbidden_at(std::size_t t) const { return t == 0 ? initial : steps.at(t - 1).forbidden; }
};

struct Closure {
  EdgeSet forbidden;  // B_X
  ClosureTrace trace;
};

/// One round of the closure applied to R_{t-1}.
inline ClosureStep closure_step(const Instance& inst, const EdgeSet& previous, std::size_t t) {
  ClosureStep step;
  step.t = t;
  step.candidates = ch_all_doctors(inst, previous.complement());
  step.accepted = ch_all_hospitals(inst, step.candidates | previous) & step.candidates;
  step.forbidden = previous | (step.candidates - step.accepted);
  return step;
}

/// B_X and the full round-by-round trace. X must contain hospitals only.
inline Closure closure(const Instance& inst, const VertexMask& deleted_hospitals) {
  inst.check_mask(deleted_hospitals);
  if (deleted_hospitals.doctor_count() != 0) throw InvalidArgument("closure takes hospitals only");

  Closure out;
  out.trace.initial = inst.incident_edges(deleted_hospitals);
  EdgeSet previous = out.trace.initial;
  for (std::size_t t = 1;; ++t) {
    out.trace.steps.push_back(closure_step(inst, previous, t));
    const ClosureStep& step = out.trace.steps.back();
    if (step.forbidden == previous) {
      out.trace.iterations = t;
      break;
    }
    previous = step.forbidden;
  }
  out.forbidden = std::move(previous);
  return out;
}

inline Closure closure(const Instance& inst, std::span<const VertexId> deleted_hospitals) {
  for (const auto& v : deleted_hospitals)
    if (v.side != Side::Hospital) throw InvalidArgument("closure takes hospitals only, got doctor '" + v.name + "'");
  return closure(inst, inst.mask(deleted_hospitals));
}

inline Closure closure(const Instance& inst) { return closure(inst, VertexMask::none(inst)); }

/// Matches each doctor with a remaining top choice to the first such edge in
/// name order. Requires B to be a closure fixed point, which guarantees no
/// hospital is the top choice of two doctors; violating that throws.
inline Matching extract_mu(const Instance& inst, const EdgeSet& forbidden) {
  const EdgeSet top = ch_all_doctors(inst, forbidden.complement());
  for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h) {
    std::size_t n = 0;
    for (EdgeIndex e : inst.edges_of_hospital(h)) n += top.contains(e);
    if (n > 1)
      throw InvalidArgument("hospital '" + inst.hospitals()[h] + "' is a top choice of " + std::to_string(n) +
                            " doctors; the edge set is not a closure fixed point");
  }
  Matching mu(inst);
  for (DoctorIndex d = 0; d < inst.num_doctors(); ++d)
    for (EdgeIndex e : inst.edges_of_doctor(d))
      if (top.contains(e)) {
        mu.insert(inst, e);
        break;
      }
  return mu;
}

/// True if mu uses only doctors' top remaining edges and covers every doctor
/// that has one. Any such matching is a valid μ for the certificate.
inline bool is_top_choice_matching(const Instance& inst, const EdgeSet& forbidden, const Matching& mu) {
  const EdgeSet remaining = forbidden.complement();
  if (!mu.edges().subset_of(ch_all_doctors(inst, remaining))) return false;
  for (DoctorIndex d : doctors_with_edges(inst, remaining))
    if (!mu.of_doctor(d)) return false;
  return true;
}

/// Hospitals unmatched by mu that have a forbidden edge or receive a doctor's
/// top remaining choice.
inline VertexMask critical_hospitals(const Instance& inst, const EdgeSet& forbidden, const Matching& mu) {
  VertexMask out = VertexMask::none(inst);
  const EdgeSet top = ch_all_doctors(inst, forbidden.complement());
  for (HospitalIndex h = 0; h < inst.num_hospitals(); ++h) {
    if (mu.of_hospital(h)) continue;
    for (EdgeIndex e : inst.edges_of_hospital(h))
      if (forbidden.contains(e) || top.contains(e)) {
        out.hospitals[h] = true;
        break;
      }
  }
  return out;
}

struct DeletionCertificate {
  EdgeSet forbidden;    // B_∅
  Matching mu;          // μ_∅
  VertexMask critical;  // S_∅, hospitals only
  ClosureTrace trace;

  std::size_t deletions() const { return critical.hospital_count(); }
};

/// Minimum set of hospitals whose removal leaves a super-stable matching;
/// mu is super-stable in G<V \ critical>.
inline DeletionCertificate solve_min_hospital_deletion(const Instance& inst) {
  Closure c = closure(inst);
  Matching mu = extract_mu(inst, c.forbidden);
  VertexMask critical = critical_hospitals(inst, c.forbidden, mu);
  return {std::move(c.forbidden), std::move(mu), std::move(critical), std::move(c.trace)};
}

struct Problem1Answer {
  bool feasible = false;
  DeletionCertificate certificate;
};

/// Can at most q hospitals be deleted so that a super-stable matching exists?
inline Problem1Answer decide_problem1(const Instance& inst, std::size_t q) {
  DeletionCertificate cert = solve_min_hospital_deletion(inst);
  const bool ok = cert.deletions() <= q;
  return {ok, std::move(cert)};
}

/// A super-stable matching of G<V \ X>, expressed over the parent instance's
/// edges, or nullopt if none exists.
inline std::optional<Matching> exists_super_stable(const Instance& inst, const VertexMask& removed) {
  Instance sub = induced_instance(inst, removed);
  DeletionCertificate cert = solve_min_hospital_deletion(sub);
  if (!cert.critical.empty()) return std::nullopt;
  return translate(cert.mu, sub, inst);
}

inline std::optional<Matching> exists_super_stable(const Instance& inst, std::span<const VertexId> removed) {
  return exists_super_stable(inst, inst.mask(removed));
}

inline std::optional<Matching> exists_super_stable(const Instance& inst) {
  return exists_super_stable(inst, VertexMask::none(inst));
}

}  // namespace superstab
