#include "orcd/info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orcd/errors.hpp"

namespace orcd {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(p) + " is outside [0,1]");
  }
}

void require_disjoint(std::initializer_list<const AxisSet*> sets) {
  std::vector<std::size_t> all;
  for (const AxisSet* s : sets) all.insert(all.end(), s->begin(), s->end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw UsageError("axis sets must be disjoint");
  }
}

AxisSet join(const AxisSet& a, const AxisSet& b) {
  AxisSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double binary_entropy(double p) {
  require_probability(p, "p");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inv_binary_entropy(double q) {
  if (std::isnan(q) || q > 1.0) throw DomainError("h2^-1 argument " + std::to_string(q) + " exceeds 1");
  if (q <= 0.0) return 0.0;
  if (q == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double star(double a, double b) {
  require_probability(a, "a");
  require_probability(b, "b");
  return a * (1.0 - b) + (1.0 - a) * b;
}

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double entropy(const Pmf& p) { return entropy(p.probs()); }

double mutual_information(const JointPmf& j, const AxisSet& a, const AxisSet& b) {
  require_disjoint({&a, &b});
  const double mi = j.entropy_of(a) + j.entropy_of(b) - j.entropy_of(join(a, b));
  return std::max(mi, 0.0);
}

double conditional_mutual_information(const JointPmf& j, const AxisSet& a, const AxisSet& b,
                                      const AxisSet& c) {
  require_disjoint({&a, &b, &c});
  const AxisSet ac = join(a, c);
  const AxisSet bc = join(b, c);
  const double cmi =
      j.entropy_of(ac) + j.entropy_of(bc) - j.entropy_of(join(ac, b)) - j.entropy_of(c);
  return std::max(cmi, 0.0);
}

double f_bound_bsc(double delta, double s) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw DomainError("delta must lie in [0, 1/2]");
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s must lie in [0, 1]");
  return binary_entropy(star(delta, inv_binary_entropy(s)));
}

}  // namespace orcd
