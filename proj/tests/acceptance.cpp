// Acceptance run at series order N = 32 and oracle depth M = 32. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "frescos/verify.hpp"

using namespace frescos;

namespace {

int failures = 0;

void report(const std::string& title, const SuiteResult& r, double seconds) {
  std::cout << (r.ok() ? "PASS " : "FAIL ") << title << ": " << r.passed << " passed, " << r.failed << " failed";
  if (r.skipped > 0) std::cout << ", " << r.skipped << " skipped";
  std::cout << " (" << seconds << " s)\n";
  for (const auto& n : r.notes) std::cout << "    " << n << "\n";
  for (const auto& f : r.failures) std::cout << "    failure: " << f << "\n";
  if (!r.ok()) ++failures;
}

template <class F>
void run(const std::string& title, F&& suite) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r = suite();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  report(title, r, dt.count());
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned long seed = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20240601UL;
  std::cout << "seed " << seed << ", N = 32, M = 32\n";
  Rng rng(seed);
  auto opts = [](int samples) { return VerifyOptions{samples, 32, 32}; };

  run("commutation relations on 100 random elements", [&] { return verify_commutation(rng, opts(100)); });
  run("Bernstein element and P_E = P_F.P_G on 100 presentations", [&] { return verify_bernstein(rng, opts(100)); });
  run("exchange identities on 50 rational pairs, unit exchange reported", [&] { return verify_exchange(rng, opts(50)); });
  run("rank-2 alpha invariant under 10 regenerations of 50 presentations",
      [&] { return verify_rank2_invariance(rng, opts(50), 10); });
  run("rank-3 alpha recursion against the closed form on 50 instances", [&] { return verify_rank3(rng, opts(50)); });
  run("semi-simplicity criteria and alpha = 0 on 50 instances", [&] { return verify_semisimplicity(rng, opts(50)); });
  run("oracle annihilators against the engine on 50 presentations", [&] { return verify_oracle(rng, opts(50)); });
  run("Xi themes s^(lambda-1) log^N for N <= 3 and five lambdas", [&] { return verify_xi_themes(opts(0)); });
  run("codimension dim E/bE = mu(bE) - mu(E) on 20 presentations", [&] { return verify_codimension(rng, opts(20)); });
  run("rank-2 kernel of a - lambda_1 b is one line at order 32", [&] { return verify_rank2_kernel(rng, opts(10)); });

  std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
