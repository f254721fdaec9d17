// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "takiff/selftest.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int k = 1; k < argc; ++k) ids.push_back(std::atoi(argv[k]));
  bool ok = true;
  for (int id : ids.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9} : ids) {
    const auto r = takiff::run_criterion(id);
    std::printf("%s\n", takiff::format_result(r).c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
