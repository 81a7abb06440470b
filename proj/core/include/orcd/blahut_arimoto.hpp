#pragma once

#include <cstddef>

#include "orcd/pmf.hpp"

namespace orcd {

struct BlahutArimotoOptions {
  double gap_tolerance = 1e-9;
  std::size_t max_iterations = 100000;
};

struct ChannelCapacity {
  double capacity = 0.0;  // I(p*; W), a lower bound within `gap` of capacity
  Pmf input = Pmf::uniform(1);
  double gap = 0.0;  // max_x D(W(.|x) || q) - I
  std::size_t iterations = 0;
};

/// Capacity of the discrete memoryless channel `w` (column = input symbol),
/// started from the uniform input. Throws SolverError carrying the last
/// duality gap if the tolerance is not met within the iteration cap.
ChannelCapacity blahut_arimoto(const StochasticMatrix& w, const BlahutArimotoOptions& opts = {});

/// I(X;Y) for input pmf `p` through `w`.
double channel_mutual_information(const StochasticMatrix& w, const Pmf& p);

}  // namespace orcd
