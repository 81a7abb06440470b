#include "orcd/blahut_arimoto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "orcd/errors.hpp"

namespace orcd {
namespace {

// D(W(.|x) || q) for every input x.
void divergences(const StochasticMatrix& w, std::span<const double> q, std::vector<double>& d) {
  for (std::size_t x = 0; x < w.cols(); ++x) {
    double acc = 0.0;
    for (std::size_t y = 0; y < w.rows(); ++y) {
      const double wyx = w(y, x);
      if (wyx > 0.0) acc += wyx * std::log2(wyx / q[y]);
    }
    d[x] = acc;
  }
}

void output_distribution(const StochasticMatrix& w, std::span<const double> r, std::vector<double>& q) {
  std::fill(q.begin(), q.end(), 0.0);
  for (std::size_t y = 0; y < w.rows(); ++y) {
    for (std::size_t x = 0; x < w.cols(); ++x) q[y] += w(y, x) * r[x];
  }
}

}  // namespace

double channel_mutual_information(const StochasticMatrix& w, const Pmf& p) {
  if (p.size() != w.cols()) throw UsageError("input pmf size does not match channel");
  std::vector<double> q(w.rows());
  std::vector<double> d(w.cols());
  output_distribution(w, p.probs(), q);
  divergences(w, q, d);
  double mi = 0.0;
  for (std::size_t x = 0; x < w.cols(); ++x) mi += p[x] * d[x];
  return std::max(mi, 0.0);
}

ChannelCapacity blahut_arimoto(const StochasticMatrix& w, const BlahutArimotoOptions& opts) {
  const std::size_t nx = w.cols();
  std::vector<double> r(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> q(w.rows());
  std::vector<double> d(nx);

  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it <= opts.max_iterations; ++it) {
    output_distribution(w, r, q);
    divergences(w, q, d);
    double lower = 0.0;
    for (std::size_t x = 0; x < nx; ++x) lower += r[x] * d[x];
    const double upper = *std::max_element(d.begin(), d.end());
    gap = upper - lower;
    if (gap < opts.gap_tolerance) {
      ChannelCapacity out;
      out.capacity = std::max(lower, 0.0);
      out.input = Pmf(r);
      out.gap = std::max(gap, 0.0);
      out.iterations = it;
      return out;
    }
    // r(x) <- r(x) 2^{D_x}, shifted by the max exponent for stability.
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      r[x] *= std::exp2(d[x] - upper);
      norm += r[x];
    }
    for (double& v : r) v /= norm;
  }
  throw SolverError("Blahut-Arimoto did not converge; last duality gap " + std::to_string(gap), gap);
}

}  // namespace orcd
