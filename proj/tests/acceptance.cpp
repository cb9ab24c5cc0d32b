// Acceptance suite: every release criterion, one pass/fail line each.
// Exit code is the number of failed criteria.

#include "barneskit/barnes.hpp"
#include "barneskit/bernoulli.hpp"
#include "barneskit/comb.hpp"
#include "barneskit/dedekind.hpp"
#include "barneskit/identities.hpp"
#include "barneskit/zeta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace barneskit;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  double time_budget_s;
  std::function<bool(std::string&)> run;
};

void run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = c.run(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && c.time_budget_s > 0 && secs > c.time_budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++g_failures;
  std::printf("[%s] %-12s (%6.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool sweep_clean(const std::string& id, const std::string& ranges, std::uint64_t seed,
                 std::string& detail, std::size_t* checked = nullptr) {
  const auto reports =
      IdentityRegistry::instance().sweep(id, SweepRanges::parse(ranges), seed);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.failed()) {
      detail = id + " failed at " + r.item.params.dump() + ": lhs=" + r.lhs + " rhs=" + r.rhs +
               (r.detail.empty() ? "" : " (" + r.detail + ")");
      return false;
    }
    if (r.passed()) ++passed;
  }
  if (passed == 0) {
    detail = id + ": no case actually ran";
    return false;
  }
  if (checked) *checked += passed;
  return true;
}

}  // namespace

int main() {
  const std::uint64_t seed = default_seed();
  std::vector<Criterion> criteria;

  // 1. Euler relation, n = 1..30, under one second.
  criteria.push_back({"criterion-1", 1.0, [&](std::string& detail) {
    return sweep_clean("EULER", "n=1..30", seed, detail);
  }});

  // 2. The three displayed order-2/3/4 formulas, k <= 20, exact.
  criteria.push_back({"criterion-2", 0, [&](std::string& detail) {
    return sweep_clean("DILCHER", "k=0..20", seed, detail);
  }});

  // 3. Subset-sum relation: n in 3..6, odd m <= 15, 5 seeded vectors per n;
  //    exactly 1/2 at (3,3), exactly 0 elsewhere.
  criteria.push_back({"criterion-3", 30.0, [&](std::string& detail) {
    const auto reports = IdentityRegistry::instance().sweep(
        "THM1", SweepRanges::parse("n=3..6,m=1..15,count=5"), seed);
    std::size_t ran = 0;
    for (const auto& r : reports) {
      if (r.failed()) {
        detail = "THM1 failed at " + r.item.params.dump();
        return false;
      }
      if (!r.passed()) continue;
      ++ran;
      const bool special = r.item.params.at("n") == 3 && r.item.params.at("m") == 3;
      const std::string expect = special ? "1/2" : "0";
      if (r.lhs != expect || r.rhs != expect) {
        detail = "THM1 value at " + r.item.params.dump() + " is " + r.lhs + ", expected " + expect;
        return false;
      }
    }
    detail = std::to_string(ran) + " points";
    return ran >= 4 * 8 * 5u;  // 4 n-values, 8 odd m, 5 vectors
  }});

  // 4. Value 3 at n=m=3 and 0 otherwise; the order-n recurrence for n in 4..6.
  criteria.push_back({"criterion-4", 0, [&](std::string& detail) {
    if (!sweep_clean("COR2", "n=3..6,m=1..15", seed, detail)) return false;
    const auto cor2 = IdentityRegistry::instance().sweep(
        "COR2", SweepRanges::parse("n=3..6,m=1..15"), seed);
    for (const auto& r : cor2) {
      if (!r.passed()) continue;
      const bool special = r.item.params.at("n") == 3 && r.item.params.at("m") == 3;
      if (r.lhs != (special ? "3" : "0")) {
        detail = "COR2 value at " + r.item.params.dump() + " is " + r.lhs;
        return false;
      }
    }
    return sweep_clean("REC1", "n=4..6,m=1..15", seed, detail);
  }});

  // 5. Closed partition form == DP for every pairwise-coprime multiset with
  //    parts <= 11, n <= 4, t <= 200; the two-part formula for three pairs.
  criteria.push_back({"criterion-5", 60.0, [&](std::string& detail) {
    std::size_t specs = 0;
    if (!sweep_clean("PART3", "maxpart=11,n=4,t=200", seed, detail, &specs)) return false;
    for (const auto& [a, b] :
         std::vector<std::pair<long, long>>{{3, 5}, {4, 7}, {9, 10}}) {
      const auto dp = partition_counts_upto(PartitionSpec({a, b}), 200);
      for (long t = 0; t <= 200; ++t)
        if (popoviciu(a, b, t) != dp[static_cast<std::size_t>(t)]) {
          detail = "two-part closed form mismatch at (" + std::to_string(a) + "," +
                   std::to_string(b) + "), t=" + std::to_string(t);
          return false;
        }
    }
    detail = std::to_string(specs) + " part multisets, t <= 200";
    return true;
  }});

  // 6. Quotient-ring sums vs complex summation within 1e-9 for moduli <= 30,
  //    and exact agreement with the closed form for a <= 7, up to 3 ones.
  criteria.push_back({"criterion-6", 0, [&](std::string& detail) {
    for (long a = 1; a <= 30; ++a) {
      std::vector<std::vector<long>> others_sets = {{}};
      std::vector<long> pool;
      for (long o : {1L, 2L, 3L, 5L, 7L, 11L})
        if (std::gcd(o, a) == 1) pool.push_back(o);
      if (!pool.empty()) others_sets.push_back({pool[0]});
      if (pool.size() >= 2) others_sets.push_back({pool[0], pool[1]});
      if (pool.size() >= 3) others_sets.push_back({pool[0], pool[1], pool[2]});
      for (const auto& others : others_sets)
        for (long r = 0; r < a; ++r) {
          const FdsKey key{r, others, a};
          const double exact = fourier_dedekind_exact(key).to_double();
          const double approx = fourier_dedekind_float(key);
          if (std::fabs(exact - approx) > 1e-9) {
            detail = "float/exact gap at mod " + std::to_string(a);
            return false;
          }
        }
    }
    return sweep_clean("EXPLICIT_SIGMA", "p=1..7,ones=1..3", seed, detail);
  }});

  // 7. The two polynomial reciprocity identities, exact in x.
  criteria.push_back({"criterion-7", 0, [&](std::string& detail) {
    return sweep_clean("COR_MT2", "n=2..3,m=0..8", seed, detail) &&
           sweep_clean("COR_N2", "m=0..8", seed, detail);
  }});

  // 8. Negative-integer specialization (n <= 4, m <= 8) and the Stirling
  //    expansion (n <= 10), both exact.
  criteria.push_back({"criterion-8", 0, [&](std::string& detail) {
    return sweep_clean("COR8", "n=1..4,m=1..8", seed, detail) &&
           sweep_clean("STIRLING", "n=1..10", seed, detail);
  }});

  // 9. Numeric dual path at s in {n+0.5, n+1.5}, x in {0.5, 1, 2.25},
  //    a in {(1,2),(2,3),(1,2,3)}; reference Hurwitz value at (2,1).
  criteria.push_back({"criterion-9", 30.0, [&](std::string& detail) {
    if (std::fabs(hurwitz_zeta(2.0, 1.0) - 1.6449340668482264) > 1e-10) {
      detail = "hurwitz_zeta(2,1) off";
      return false;
    }
    return sweep_clean("ZETA_DUAL", "", seed, detail) &&
           sweep_clean("COR7", "n=1..4", seed, detail) &&
           sweep_clean("PROP_MAIN", "m=0..6,ones=1..3", seed, detail);
  }});

  // 10. Difference, shift, two-index symmetry, corrected differentiated
  //     symmetry, P_m recurrence, self-duality (k <= 20), final recurrences.
  criteria.push_back({"criterion-10", 60.0, [&](std::string& detail) {
    return sweep_clean("DIFF", "n=1..4,m=0..10", seed, detail) &&
           sweep_clean("SHIFT", "n=1..4,m=0..10", seed, detail) &&
           sweep_clean("SYMM1", "n=1..3,l=0..8,m=0..8", seed, detail) &&
           sweep_clean("SYMM2", "n=1..3,l=0..8,m=0..8", seed, detail) &&
           sweep_clean("PREC", "n=1..3,m=1..8", seed, detail) &&
           sweep_clean("SELFDUAL", "k=0..20", seed, detail) &&
           sweep_clean("FINALREC", "n=1..4,m=1..8", seed, detail);
  }});

  // 11. Full registry run: green, traceable, and the CLI agrees.
  criteria.push_back({"criterion-11", 300.0, [&](std::string& detail) {
    const auto& reg = IdentityRegistry::instance();
    const auto all = reg.run_all(seed);
    std::size_t failed = 0;
    for (const auto& r : all)
      if (r.failed()) ++failed;
    if (failed != 0) {
      detail = std::to_string(failed) + " failing cases";
      return false;
    }
    std::printf("  traceability (%zu checks):\n", all.size());
    for (const auto& id : reg.ids())
      std::printf("    %-15s %s\n", id.c_str(), reg.entry(id).statement.c_str());
    const std::string cmd =
        std::string(BARNESKIT_CLI_PATH) + " verify --all > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      detail = "CLI verify --all did not exit 0";
      return false;
    }
    detail = std::to_string(all.size()) + " checks across " + std::to_string(reg.ids().size()) +
             " identities";
    return true;
  }});

  for (const auto& c : criteria) run_criterion(c);
  std::printf("%s (%d of %zu criteria failed)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures, criteria.size());
  return g_failures;
}
