// Small random sweep over m^3 = 0 algebras; JSONL to stdout, summary to stderr.
#include <iostream>

#include "gorext/bench.hpp"

using namespace gorext;

int main() {
  GeneratorSpec spec;
  spec.family = Family::loewy3_random;
  spec.n = 3;
  spec.p = 2;
  spec.cap = 12;
  spec.count = 20;
  spec.seed = 7;
  SweepOptions opt;
  opt.bound = 4;
  opt.tail_from = 3;
  SweepResult r = run_sweep(generate(spec), opt);
  std::cout << to_jsonl(r.records);
  std::cerr << r.summary.to_json().dump() << "\n";
  return r.summary.exit_code();
}
