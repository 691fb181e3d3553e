#include <iostream>

#include "braidcable/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : braidcable::run_acceptance(&std::cout)) all = all && r.passed;
  std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
