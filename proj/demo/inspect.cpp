// Prints invariants, Ext(D, A) and the detectors for a few small algebras.
// Usage: demo-inspect ["ideal" [p]]
#include <iostream>

#include "gorext/detect.hpp"
#include "gorext/groebner.hpp"

using namespace gorext;

namespace {

void show(const char* ideal, std::uint32_t p) {
  LocalAlgebra A = algebra_from_ideal(ideal, p);
  std::cout << "k[x..]/(" << ideal << ") over F_" << p << "\n";
  std::cout << "  dim " << A.dim() << ", socle " << socle(A).dim() << "\n";
  Tc1Result t = tc1_check(A, 5);
  std::cout << "  Ext^i(D, A), i = 1..5:";
  for (auto d : t.ext) std::cout << ' ' << d;
  std::cout << "  -> " << to_string(t.outcome) << "\n";
  for (const Verdict& v : {gorenstein(A), golod(A, 6), hypersurface(A, 6), complete_intersection(A, 6)})
    std::cout << "  " << v.property << ": " << (v.value ? "yes" : "no") << " [" << v.tag() << "] " << v.certificate << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    if (argc > 1) {
      show(argv[1], argc > 2 ? static_cast<std::uint32_t>(std::stoul(argv[2])) : 2);
      return 0;
    }
    for (const char* I : {"x^3", "x^2, y^2", "x^2, x*y, y^2", "x*y, x^3, y^3"}) show(I, 2);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
