// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <string>

#include "suite/acceptance.hpp"

int main(int argc, char** argv) {
  suite::SuiteOptions opt;
  opt.quick = !(argc > 1 && std::string(argv[1]) == "--full");
  int failed = 0;
  for (const auto& r : suite::run_acceptance(opt)) {
    std::printf("%s\n", suite::summary_line(r).c_str());
    failed += !r.pass;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed ? 1 : 0;
}
