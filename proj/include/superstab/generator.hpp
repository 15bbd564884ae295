#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superstab/error.hpp"
#include "superstab/model.hpp"

namespace superstab {

struct GeneratorParams {
  std::size_t doctors = 0;
  std::size_t hospitals = 0;
  double density = 1.0;   // probability that a doctor-hospital pair is an edge
  double tie_prob = 0.0;  // probability that adjacent list entries share a tie group
  std::uint64_t seed = 0;

  void validate() const {
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
    if (!(tie_prob >= 0.0 && tie_prob <= 1.0)) throw InvalidArgument("tie probability must lie in [0, 1]");
  }
};

namespace detail {

// std:: distributions differ between standard libraries; drawing straight
// from the engine keeps generated files identical everywhere.
class PortableRandom {
 public:
  explicit PortableRandom(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::vector<std::string>> random_groups(PortableRandom& rng, std::vector<std::string> names,
                                                           double tie_prob) {
  rng.shuffle(names);
  std::vector<std::vector<std::string>> groups;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i == 0 || !(rng.uniform() < tie_prob))
      groups.push_back({names[i]});
    else
      groups.back().push_back(names[i]);
  }
  return groups;
}

}  // namespace detail

/// Random instance with doctors d1..dn and hospitals h1..hm. Each pair is an
/// edge with probability `density`; each vertex's list is a random
/// permutation of its neighbours whose adjacent entries are merged into one
/// tie group with probability `tie_prob` per boundary.
inline Instance generate_instance(const GeneratorParams& p) {
  p.validate();
  detail::PortableRandom rng(p.seed);
  std::vector<std::string> dn, hn;
  for (std::size_t i = 1; i <= p.doctors; ++i) dn.push_back("d" + std::to_string(i));
  for (std::size_t j = 1; j <= p.hospitals; ++j) hn.push_back("h" + std::to_string(j));

  std::vector<std::vector<bool>> adjacent(p.doctors, std::vector<bool>(p.hospitals));
  for (std::size_t i = 0; i < p.doctors; ++i)
    for (std::size_t j = 0; j < p.hospitals; ++j) adjacent[i][j] = rng.uniform() < p.density;

  InstanceBuilder b;
  for (const auto& d : dn) b.add_doctor(d);
  for (const auto& h : hn) b.add_hospital(h);
  for (std::size_t i = 0; i < p.doctors; ++i) {
    std::vector<std::string> nbrs;
    for (std::size_t j = 0; j < p.hospitals; ++j)
      if (adjacent[i][j]) nbrs.push_back(hn[j]);
    b.preferences(doctor(dn[i]), detail::random_groups(rng, std::move(nbrs), p.tie_prob));
  }
  for (std::size_t j = 0; j < p.hospitals; ++j) {
    std::vector<std::string> nbrs;
    for (std::size_t i = 0; i < p.doctors; ++i)
      if (adjacent[i][j]) nbrs.push_back(dn[i]);
    b.preferences(hospital(hn[j]), detail::random_groups(rng, std::move(nbrs), p.tie_prob));
  }
  return b.build();
}

}  // namespace superstab
