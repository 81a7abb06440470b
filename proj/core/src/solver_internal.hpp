#pragma once

// Dense state and fast objective used inside the capacity search.

#include <vector>

#include "orcd/solver.hpp"

namespace orcd::detail {

// Floating-point floor for the rate constraint: exact-zero mutual
// informations evaluate to ~1e-16.
inline constexpr double kFeasibilityNoise = 1e-13;

struct Problem {
  std::size_t nu = 1, nx = 1, nz = 1, ny = 1, nh = 1;
  std::vector<double> pz;
  std::vector<double> w;  // p(y|x,z) as [x][z][y]
  double r1 = 0.0;
  double r2 = 0.0;
};

struct State {
  std::vector<double> joint;  // p(u,x1) as [u][x]
  std::vector<double> tc;     // p(yhat|y,u) as [u][y][yhat]
};

Problem make_problem(const DiscreteOrcd& m, std::size_t card_u, std::size_t card_yhat, double r1, double r2);

/// Same quantities as orcd::objective, computed from conditional entropies
/// without materializing the five-axis table.
class Evaluator {
 public:
  explicit Evaluator(const Problem& p);

  /// Full evaluation; also caches the joint-dependent marginals and the
  /// per-u entropy terms of `s`.
  ObjectiveValue operator()(const State& s);

  /// Evaluation of `s` assuming it differs from the last fully evaluated
  /// state only in the test-channel columns of `u`. Leaves the cache alone.
  ObjectiveValue with_changed_u(const State& s, std::size_t u);

 private:
  struct Terms {
    double h_given_uy = 0.0;   // contribution to H(Yhat | U, Y_R)
    double h_given_uz = 0.0;   // contribution to H(Yhat | U, Z)
    double h_given_uxz = 0.0;  // contribution to H(Yhat | U, X1, Z)
  };
  Terms terms_for(const State& s, std::size_t u);
  ObjectiveValue combine(double i_uy, const Terms& sum) const;

  const Problem& p_;
  double i_uy_ = 0.0;
  std::vector<Terms> terms_;
  std::vector<double> puzy_;
  std::vector<double> puy_;
  std::vector<double> pu_;
  std::vector<double> py_;
  std::vector<double> acc_;
};

AuxiliaryScheme to_scheme(const Problem& p, const State& s);
State from_scheme(const AuxiliaryScheme& s);

}  // namespace orcd::detail
