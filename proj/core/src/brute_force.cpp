#include <cmath>
#include <limits>
#include <string>

#include "orcd/errors.hpp"
#include "orcd/solver.hpp"
#include "solver_internal.hpp"

namespace orcd {
namespace {

// All ways of writing `total` as an ordered sum of `parts` nonnegative
// integers, scaled by 1/total.
std::vector<std::vector<double>> simplex_grid(std::size_t parts, std::size_t total) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> counts(parts, 0);
  auto recurse = [&](auto&& self, std::size_t k, std::size_t left) -> void {
    if (k + 1 == parts) {
      counts[k] = left;
      std::vector<double> p(parts);
      for (std::size_t i = 0; i < parts; ++i) p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[k] = c;
      self(self, k + 1, left - c);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

}  // namespace

BruteForceResult brute_force_capacity(const DiscreteOrcd& m, const BruteForceConfig& cfg) {
  const Alphabets a = m.alphabets();
  if (cfg.card_u < 1 || cfg.card_u > 3) throw UsageError("brute force supports 1 <= |U| <= 3");
  if (a.x1 > 2) throw UsageError("brute force supports |X1| <= 2");
  if (cfg.card_yhat < 1 || cfg.card_yhat > 3) throw UsageError("brute force supports 1 <= |Yhat| <= 3");
  if (!(cfg.resolution >= 0.05 - 1e-12) || cfg.resolution > 1.0) {
    throw UsageError("brute force resolution must lie in [0.05, 1]");
  }
  const auto steps = static_cast<std::size_t>(std::lround(1.0 / cfg.resolution));
  if (std::abs(static_cast<double>(steps) * cfg.resolution - 1.0) > 1e-9) {
    throw UsageError("brute force resolution must divide 1");
  }

  const auto joints = simplex_grid(cfg.card_u * a.x1, steps);
  const auto columns = simplex_grid(cfg.card_yhat, steps);
  const std::size_t ncols = cfg.card_u * a.yr;
  double combos = static_cast<double>(joints.size());
  for (std::size_t c = 0; c < ncols; ++c) combos *= static_cast<double>(columns.size());
  if (combos > static_cast<double>(cfg.max_evaluations)) {
    throw UsageError("brute force would need " + std::to_string(static_cast<long double>(combos)) +
                     " evaluations (cap " + std::to_string(cfg.max_evaluations) + ")");
  }

  const LinkCapacities links = link_capacities(m);
  BruteForceResult result;
  result.best_rate = -std::numeric_limits<double>::infinity();

  std::vector<std::size_t> pick(ncols, 0);
  std::vector<double> tc(ncols * cfg.card_yhat);
  for (const auto& joint : joints) {
    const JointPmf jp({cfg.card_u, a.x1}, joint, {"U", "X1"});
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      for (std::size_t c = 0; c < ncols; ++c) {
        std::copy(columns[pick[c]].begin(), columns[pick[c]].end(),
                  tc.begin() + static_cast<std::ptrdiff_t>(c * cfg.card_yhat));
      }
      const AuxiliaryScheme s{jp, TestChannel(cfg.card_u, a.yr, cfg.card_yhat, tc)};
      const ObjectiveValue v = objective(m, s, links.r2);
      ++result.evaluations;
      if (v.constraint_lhs <= links.r1 + detail::kFeasibilityNoise && v.rate > result.best_rate) {
        result.best_rate = v.rate;
      }
      std::size_t c = 0;
      for (; c < ncols; ++c) {
        if (++pick[c] < columns.size()) break;
        pick[c] = 0;
      }
      if (c == ncols) break;
    }
  }
  if (result.best_rate == -std::numeric_limits<double>::infinity()) {
    throw SolverError("brute force found no feasible point");
  }
  return result;
}

}  // namespace orcd
