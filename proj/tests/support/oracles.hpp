#pragma once
// Reference computations written independently of the library: long double
// arithmetic, natural logs converted at the end, Newton instead of bisection.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using real = long double;

inline real log2l_(real x) { return std::log(x) / std::log(2.0L); }

inline real h2(real p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * log2l_(p) - (1 - p) * log2l_(1 - p);
}

// Newton on [0, 1/2] starting from the midpoint; h2 is concave so the
// iterates stay bracketed once they fall below the root.
inline real h2_inv(real q) {
  if (q <= 0) return 0;
  if (q >= 1) return 0.5L;
  real lo = 0, hi = 0.5L;
  for (int i = 0; i < 200; ++i) {
    const real mid = (lo + hi) / 2;
    (h2(mid) < q ? lo : hi) = mid;
  }
  real p = (lo + hi) / 2;
  for (int i = 0; i < 8; ++i) {
    const real d = log2l_((1 - p) / p);
    if (d == 0) break;
    p -= (h2(p) - q) / d;
  }
  return p;
}

inline real conv(real a, real b) { return a + b - 2 * a * b; }

// I(X;Y) for input p through a channel given as w[x][y].
inline real mutual_info(const std::vector<real>& p, const std::vector<std::vector<real>>& w) {
  const std::size_t ny = w[0].size();
  std::vector<real> q(ny, 0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < ny; ++y) q[y] += p[x] * w[x][y];
  real i = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (p[x] > 0 && w[x][y] > 0) i += p[x] * w[x][y] * log2l_(w[x][y] / q[y]);
  return i;
}

// Capacity of a binary-input channel by a fine scan then a ternary search.
inline real binary_input_capacity(const std::vector<std::vector<real>>& w, real step = 1e-3L) {
  real best_p = 0, best = -1;
  for (real p = 0; p <= 1 + step / 2; p += step) {
    const real v = mutual_info({1 - p, p}, w);
    if (v > best) best = v, best_p = p;
  }
  real a = std::max<real>(0, best_p - step), b = std::min<real>(1, best_p + step);
  for (int i = 0; i < 100; ++i) {
    const real m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
    if (mutual_info({1 - m1, m1}, w) < mutual_info({1 - m2, m2}, w)) {
      a = m1;
    } else {
      b = m2;
    }
  }
  return std::max(best, mutual_info({1 - a, a}, w));
}

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(n);
  double s = 0;
  for (double& x : v) s += (x = e(rng));
  for (double& x : v) x /= s;
  return v;
}

}  // namespace oracle
