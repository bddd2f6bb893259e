#include <iostream>

#include "gentle/reproduce.hpp"

int main() {
  bool ok = true;
  for (const auto& r : gentle::run_acceptance()) {
    std::cout << gentle::format_result(r) << std::endl;
    ok &= r.passed;
  }
  return ok ? 0 : 1;
}
