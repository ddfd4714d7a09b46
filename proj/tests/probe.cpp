#include "mvkit/harness.hpp"
#include <iostream>
using namespace mvkit;
int main() {
  std::vector<NamedAlgebra> cat = {
    {"trivial", Algebra::trivial()},
    {"L2", Algebra::lukasiewicz_chain(1)},
    {"L3", Algebra::lukasiewicz_chain(2)},
    {"L4", Algebra::lukasiewicz_chain(3)},
    {"B2", Algebra::boolean_algebra(2)},
    {"L3xL3", Algebra::product({Algebra::lukasiewicz_chain(2), Algebra::lukasiewicz_chain(2)})},
    {"L3xL2", Algebra::product({Algebra::lukasiewicz_chain(2), Algebra::lukasiewicz_chain(1)})},
    {"Q", Algebra::divisible_rational_chain()},
  };
  for (auto& sel : harness_selectors()) {
    for (auto& entry : cat) {
      try {
        auto rep = run_theorem_harness(sel, {entry});
        std::cout << sel << " " << entry.name << ": c=" << rep.consistent
                  << " v=" << rep.vacuous << " ce=" << rep.counterexamples
                  << " u=" << rep.unsupported << "\n";
      } catch (const std::exception& e) {
        std::cout << sel << " " << entry.name << ": EXCEPTION " << e.what() << "\n";
      }
    }
  }
  return 0;
}
