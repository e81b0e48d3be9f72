// Acceptance suite: runs every criterion of the built-in verification at
// full scale and prints one PASS/FAIL line per criterion.

#include <cstring>
#include <iostream>

#include "landscape/parallel.hpp"
#include "landscape/verify.hpp"

int main(int argc, char** argv) {
  landscape::VerifyOptions opts;
  opts.threads = landscape::default_thread_count();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
  }

  std::cout << "landscape acceptance criteria ("
            << (opts.quick ? "quick" : "full") << ", " << opts.threads
            << " threads)\n";
  const auto results = landscape::run_verification(opts, std::cout, &std::cerr);

  int failures = 0;
  double total = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    total += r.seconds;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " ("
            << results.size() - failures << "/" << results.size() << ")"
            << std::endl;
  std::cerr << "total time: " << total << "s" << std::endl;
  return failures == 0 ? 0 : 1;
}
