// Acceptance checks. Prints one PASS/FAIL line per criterion, with the
// measured numbers on the indented lines below it. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orcd/info.hpp"
#include "orcd/models.hpp"
#include "orcd/rates.hpp"
#include "orcd/solver.hpp"

using namespace orcd;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    notes.push_back(std::string(cond ? "ok   " : "MISS ") + buf);
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  body(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < budget_s, "runtime %.3f s < %.0f s", secs, budget_s);
  std::printf("[%s] %d. %s\n", c.ok ? "PASS" : "FAIL", id, title);
  for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) < 0) == lo_negative ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void crossovers(Check& c) {
  const double r1 = 1.2, pz = 0.15;
  const double df_pdcf = bisect(
      [&](double d) { return parallel_binary_df({d, pz, r1}).value - parallel_binary_pdcf({d, pz, r1}).value; }, 1e-6,
      0.2);
  c.expect(std::abs(df_pdcf - 0.0463) <= 5e-4, "df = pdcf at delta = %.6f (target 0.0463 +- 5e-4)", df_pdcf);

  // First delta from which pdcf sits on the cut-set bound.
  const double meet = bisect(
      [&](double d) {
        const double gap = parallel_binary_cutset({d, pz, r1}).value - parallel_binary_pdcf({d, pz, r1}).value;
        return gap > 1e-12 ? 1.0 : -1.0;
      },
      0.05, 0.5);
  c.expect(std::abs(meet - 0.2430) <= 5e-4, "pdcf meets cutset at delta = %.6f (target 0.2430 +- 5e-4)", meet);
}

void capacity_gap(Check& c) {
  const BinaryMrcd m{0.1, 0.5, 0.25};
  const double cap = binary_capacity_pz_half(m).value;
  const double cut = binary_cutset(m).value;
  const double want_cap = static_cast<double>(1 - oracle::h2(oracle::conv(0.1L, oracle::h2_inv(0.75L))));
  c.expect(std::abs(cap - want_cap) < 1e-10 && std::abs(cap - 0.15625) < 1e-4, "capacity = %.6f (~0.15625)", cap);
  c.expect(cap < cut, "capacity < binary_cutset = %.6f", cut);
  c.expect(std::abs(cut - 0.53100) < 1e-4, "binary_cutset = %.6f (target ~0.53100)", cut);
  c.expect(cut - cap > 0.37, "gap = %.6f (target > 0.37)", cut - cap);
  const double unclipped = 1 - binary_entropy(0.1);
  c.notes.push_back("info 1 - h2(delta) = " + std::to_string(unclipped) + ", gap to it = " + std::to_string(unclipped - cap));
}

void solver_vs_closed_form(Check& c) {
  for (double delta : {0.0, 0.1, 0.25}) {
    const BinaryMrcd b{delta, 0.5, 0.25};
    const double anchor = binary_capacity_pz_half(b).value;
    const DiscreteOrcd m = embed_binary(b);
    const SolveReport r = solve_capacity(m);
    c.expect(r.feasible && r.best_rate >= anchor - 2e-2 && r.best_rate <= anchor + 1e-9,
             "delta=%.2f solve %.6f in [%.6f, %.6f], slack %.2e", delta, r.best_rate, anchor - 2e-2, anchor + 1e-9,
             r.constraint_slack);
    const BruteForceResult g = brute_force_capacity(m, {0.05});
    c.expect(g.best_rate >= anchor - 5e-2 && g.best_rate <= anchor + 1e-9,
             "delta=%.2f brute force %.6f in [%.6f, %.6f] (%zu evaluations)", delta, g.best_rate, anchor - 5e-2,
             anchor + 1e-9, g.evaluations);
  }
}

void gaussian_branch_law(Check& c) {
  const double power = 0.3, r1 = 1.0;
  const double threshold = std::sqrt(std::exp2(-2 * r1) * (1 + power));
  const int n = 1000;
  int mismatches = 0, switches = 0;
  double switch_at = -1;
  std::string prev;
  for (int i = 0; i < n; ++i) {
    const GaussianMrcd m{power, i / double(n - 1), r1};
    const RatePoint p = gaussian_pdcf(m);
    if (p.value != std::max(gaussian_df(m).value, gaussian_cf(m).value)) ++mismatches;
    if (!prev.empty() && p.branch != prev) ++switches, switch_at = m.rho;
    prev = p.branch;
  }
  c.expect(mismatches == 0, "pdcf != max{df, cf} at %d of %d points", mismatches, n);
  c.expect(switches == 1 && std::abs(switch_at - threshold) <= 1e-3, "%d switch(es), at rho = %.6f (threshold %.6f)",
           switches, switch_at, threshold);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  int agree = 0, tried = 0;
  while (tried < 50) {
    const GaussianMrcd m{power, u(rng), r1};
    const double sign_term = power + 1 - std::exp2(2 * r1) * m.rho * m.rho;
    if (std::abs(sign_term) < 1e-6) continue;
    const double alpha = (0.01 + 0.98 * u(rng)) * gaussian_alpha_max(m);
    const double h = 1e-6;
    const double slope = gaussian_G(alpha + h, m) - gaussian_G(alpha - h, m);
    agree += (slope > 0) == (sign_term > 0);
    ++tried;
  }
  c.expect(agree == 50, "dG/dalpha sign agrees at %d of 50 random (alpha, rho)", agree);
}

void property_suites(Check& c) {
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const double p = 0.5 * i / 99.0;
    if (std::abs(inv_binary_entropy(binary_entropy(p)) - p) > 1e-10) ++bad;
  }
  c.expect(bad == 0, "h2^-1(h2(p)) round trip: %d of 100 beyond 1e-10", bad);

  double worst = 0;
  for (double delta : {0.05, 0.1, 0.25, 0.4}) {
    std::vector<double> f(200);
    for (int i = 0; i < 200; ++i) f[i] = f_bound_bsc(delta, i / 199.0);
    for (int i = 1; i < 199; ++i) worst = std::min(worst, f[i - 1] - 2 * f[i] + f[i + 1]);
  }
  c.expect(worst >= -1e-8, "f(u) smallest second difference %.3e (>= -1e-8)", worst);

  int drops = 0;
  const std::pair<double, double> pairs[] = {{0.05, 0.5}, {0.1, 1.2}, {0.25, 0.25}, {0.4, 1.8}};
  for (auto [delta, r1] : pairs) {
    double prev = g_alpha(r1 / 2, delta, r1);
    for (int i = 1; i < 100; ++i) {
      const double v = g_alpha(r1 / 2 + i / 99.0, delta, r1);
      if (v < prev - 1e-10) ++drops;
      prev = v;
    }
  }
  c.expect(drops == 0, "g(alpha) decreases %d times over 4 (delta, r1) pairs", drops);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0, 1);
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    const RateFamily families[] = {ParallelBinaryMrcd{0.5 * u(rng), u(rng), 2.5 * u(rng)},
                                   BinaryMrcd{0.5 * u(rng), u(rng), 1.5 * u(rng)},
                                   GaussianMrcd{0.01 + 3 * u(rng), 2 * u(rng) - 1, 2 * u(rng)}};
    for (const RateFamily& f : families) {
      const double cut = evaluate(Scheme::cutset, f).value;
      for (Scheme s : {Scheme::df, Scheme::cf, Scheme::pdcf})
        if (evaluate(s, f).value > cut + 1e-12) ++violations;
    }
  }
  c.expect(violations == 0, "cutset below an achievable rate %d times in 500 x 3 points", violations);
}

void classifier(Check& c) {
  struct Example {
    const char* name;
    BinaryMrcd params;
    TightnessCase expected;
  };
  const Example examples[] = {{"p_z=0", {0.1, 0.0, 0.25}, TightnessCase::case1},
                              {"delta=0", {0.0, 0.3, 0.6}, TightnessCase::case2},
                              {"delta=0,p_z=0,r1=0.5", {0.0, 0.0, 0.5}, TightnessCase::case3},
                              {"delta=0.1,p_z=0.3,r1=1.2", {0.1, 0.3, 1.2}, TightnessCase::case4}};
  for (const Example& e : examples) {
    const DiscreteOrcd m = embed_binary(e.params);
    const auto cases = classify_cutset_tightness(m);
    std::string fired;
    for (TightnessCase t : cases) fired += to_string(t) + " ";
    c.expect(cases.contains(e.expected), "%s fires { %s} (needs %s)", e.name, fired.c_str(),
             to_string(e.expected).c_str());
    const double cut = cutset_discrete(m);
    const double rate = solve_capacity(m).best_rate;
    c.expect(rate >= cut - 2e-2 && rate <= cut + 1e-9, "%s solve %.6f vs cutset %.6f", e.name, rate, cut);
  }
}

}  // namespace

int main() {
  criterion(1, "Crossover reproduction (parallel binary, r1=1.2, p_z=0.15)", 1, crossovers);
  criterion(2, "Capacity gap below the cut-set bound (binary, r1=0.25, p_z=0.5, delta=0.1)", 1, capacity_gap);
  criterion(3, "Solver and brute force against the closed-form capacity", 300, solver_vs_closed_form);
  criterion(4, "Gaussian pDCF branch law", 1, gaussian_branch_law);
  criterion(5, "Property suites", 10, property_suites);
  criterion(6, "Cut-set tightness classifier", 300, classifier);
  std::printf("%d of 6 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
