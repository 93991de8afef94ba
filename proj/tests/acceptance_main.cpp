#include <fstream>
#include <iostream>

#include "wiman/selftest.hpp"

int main(int argc, char** argv) {
  wiman::SelftestOptions opt;
  if (argc > 1) {
    try {
      opt.facts = wiman::load_facts_file(argv[1]);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << "; using built-in records" << std::endl;
    }
  }
  auto results = wiman::run_acceptance(opt, std::cout);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return failed;
}
