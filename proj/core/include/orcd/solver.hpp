#pragma once

// Numerical evaluation of the ORC-D capacity expression
//
//   C = sup  R2 + I(U;Y_R) + I(X1;Yhat_R | U,Z)
//       s.t. R1 >= I(U;Y_R) + I(Y_R;Yhat_R | U,Z)
//
// over p(u,x1) p(z) p(y_R|x1,z) p(yhat_R|y_R,u), plus the cut-set bound and a
// brute-force grid oracle for tiny models.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "orcd/models.hpp"
#include "orcd/pmf.hpp"

namespace orcd {

/// p(yhat | y_R, u), stored row-major as [u][y_R][yhat].
class TestChannel {
 public:
  TestChannel(std::size_t card_u, std::size_t card_yr, std::size_t card_yhat, std::vector<double> table);

  std::size_t card_u() const noexcept { return card_u_; }
  std::size_t card_yr() const noexcept { return card_yr_; }
  std::size_t card_yhat() const noexcept { return card_yhat_; }
  std::span<const double> table() const noexcept { return table_; }

  double operator()(std::size_t u, std::size_t y, std::size_t yhat) const {
    return table_[(u * card_yr_ + y) * card_yhat_ + yhat];
  }

 private:
  std::size_t card_u_;
  std::size_t card_yr_;
  std::size_t card_yhat_;
  std::vector<double> table_;
};

struct AuxiliaryScheme {
  JointPmf joint_ux1;  // axes [U, X1]
  TestChannel test_channel;

  std::size_t card_u() const { return joint_ux1.dims()[0]; }
  std::size_t card_yhat() const { return test_channel.card_yhat(); }
};

/// Largest auxiliary alphabets that are ever needed: |U| <= |X1| + 3,
/// |Yhat| <= |U| |Y_R| + 1.
std::size_t max_card_u(const DiscreteOrcd& m);
std::size_t max_card_yhat(const DiscreteOrcd& m, std::size_t card_u);

/// Throws UsageError on cardinality or shape mismatch with `m`.
void check_scheme(const DiscreteOrcd& m, const AuxiliaryScheme& s);

struct ObjectiveValue {
  double rate = 0.0;            // R2 + I(U;Y_R) + I(X1;Yhat|U,Z)
  double constraint_lhs = 0.0;  // I(U;Y_R) + I(Y_R;Yhat|U,Z)
  double i_u_yr = 0.0;
  double i_x1_yhat = 0.0;       // I(X1;Yhat | U,Z)
  double i_yr_yhat = 0.0;       // I(Y_R;Yhat | U,Z)
};

/// Assembles the joint table over (U, X1, Z, Y_R, Yhat) and evaluates the
/// rate and constraint terms. R2 comes from link_capacities unless given.
ObjectiveValue objective(const DiscreteOrcd& m, const AuxiliaryScheme& s);
ObjectiveValue objective(const DiscreteOrcd& m, const AuxiliaryScheme& s, double r2);

/// The joint pmf p(u,x1)p(z)p(y_R|x1,z)p(yhat|y_R,u) with axes U,X1,Z,YR,YH.
JointPmf assemble_joint(const DiscreteOrcd& m, const AuxiliaryScheme& s);

struct SolverConfig {
  std::size_t restarts = 32;
  std::size_t grid_steps = 16;      // coarse scan points per line search
  std::size_t max_iters = 2000;     // block updates per restart
  std::size_t stall_iters = 400;    // stop a restart after this many idle updates
  std::uint64_t seed = 0;
  std::size_t card_u = 0;           // 0: use max_card_u
  std::size_t card_yhat = 0;        // 0: use max_card_yhat
  std::size_t product_cap = 512;    // |X1| |Y_R| |Z| limit
  std::size_t threads = 1;          // 0: hardware concurrency
};

struct SolveReport {
  double best_rate = 0.0;
  AuxiliaryScheme best_scheme;
  bool feasible = false;
  double constraint_slack = 0.0;  // r1 - constraint_lhs
  std::size_t restarts_used = 0;
  std::uint64_t seed = 0;
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Multi-restart block coordinate ascent. The result is a feasible point,
/// hence a lower bound on the capacity. Deterministic for a fixed config.
SolveReport solve_capacity(const DiscreteOrcd& m, const SolverConfig& cfg = {});

std::string solve_report_to_json(const SolveReport& report, int indent = 2);

/// R2 + min{R1, max_{p(x1)} I(X1;Y_R|Z)}.
double cutset_discrete(const DiscreteOrcd& m);

struct BruteForceConfig {
  double resolution = 0.05;  // must divide 1
  std::size_t card_u = 1;
  std::size_t card_yhat = 2;
  std::size_t max_evaluations = 50'000'000;
};

struct BruteForceResult {
  double best_rate = 0.0;
  std::size_t evaluations = 0;
};

/// Exhaustive search over simplex grids for p(u,x1) and every test-channel
/// column. Limited to |U| <= 3, |X1| <= 2, |Yhat| <= 3.
BruteForceResult brute_force_capacity(const DiscreteOrcd& m, const BruteForceConfig& cfg = {});

enum class TightnessCase { case1, case2, case3, case4 };

std::string to_string(TightnessCase c);

/// Sufficient conditions under which the cut-set bound is the capacity:
///  1: Y_R independent of Z for every input,
///  2: Y_R a deterministic function of (X1, Z),
///  3: max I(X1;Y_R) >= R1,
///  4: R1 >= H(Y_R|Z) at the maximizer of I(X1;Y_R|Z).
std::set<TightnessCase> classify_cutset_tightness(const DiscreteOrcd& m);

}  // namespace orcd
