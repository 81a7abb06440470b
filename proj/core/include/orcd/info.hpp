#pragma once

// Discrete information measures. All logarithms are base 2.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "orcd/pmf.hpp"

namespace orcd {

using AxisSet = std::vector<std::size_t>;

double binary_entropy(double p);

/// Inverse of binary_entropy restricted to [0, 1/2]. Negative arguments map
/// to 0. Bisection to 1e-12 absolute.
double inv_binary_entropy(double q);

/// Binary convolution a(1-b) + (1-a)b.
double star(double a, double b);

double entropy(const Pmf& p);
double entropy(std::span<const double> probs);

double mutual_information(const JointPmf& j, const AxisSet& a, const AxisSet& b);
double conditional_mutual_information(const JointPmf& j, const AxisSet& a, const AxisSet& b,
                                      const AxisSet& c);

/// Conditional entropy bound of a BSC(delta): h2(delta * h2^{-1}(s)).
double f_bound_bsc(double delta, double s);

}  // namespace orcd
