#include <cstring>
#include <iostream>

#include "kspec/acceptance.hpp"

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::strcmp(argv[1], "full") == 0;
  const auto results = kspec::run_acceptance(full ? kspec::VerifyLevel::full : kspec::VerifyLevel::quick,
                                             {}, &std::cout);
  const bool ok = kspec::all_gating_passed(results);
  std::cout << (ok ? "acceptance: all gating criteria passed" : "acceptance: FAILED") << '\n';
  return ok ? 0 : 1;
}
