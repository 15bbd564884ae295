// Loads an instance, reports whether a super-stable matching exists, and if
// not, which hospitals to close so that one does.
//
//   repair_example samples/tie.ssm

#include <fstream>
#include <iostream>
#include <sstream>

#include "superstab/superstab.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <instance.ssm>\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  std::stringstream text;
  text << in.rdbuf();

  try {
    const auto inst = superstab::parse_instance(text.str());
    const auto cert = superstab::solve_min_hospital_deletion(inst);

    if (cert.critical.empty()) {
      std::cout << "super-stable matching:\n";
    } else {
      std::cout << "close " << cert.deletions() << " hospital(s):";
      for (const auto& v : inst.vertices(cert.critical)) std::cout << ' ' << v.name;
      std::cout << "\nthen match:\n";
    }
    for (const auto& [d, h] : superstab::edge_names(inst, cert.mu.edges())) std::cout << "  " << d << " - " << h << '\n';
  } catch (const superstab::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
