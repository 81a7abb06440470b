#include "orcd/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orcd/errors.hpp"
#include "orcd/info.hpp"

namespace orcd {
namespace {

// h2^-1 with the argument clamped to [0, 1]; above 1 the compression noise
// saturates at a fair coin.
double inv_h2_clamped(double x) {
  if (x >= 1.0) return 0.5;
  return inv_binary_entropy(x);
}

RatePoint point(Scheme s, double value) {
  RatePoint p;
  p.scheme = s;
  p.value = std::max(value, 0.0);
  return p;
}

// Two-sided tolerance for domain endpoints computed in floating point.
constexpr double kEdge = 1e-12;

}  // namespace

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::cutset: return "cutset";
    case Scheme::df: return "df";
    case Scheme::cf: return "cf";
    case Scheme::pdcf: return "pdcf";
    case Scheme::capacity: return "capacity";
  }
  return "?";
}

Scheme scheme_from_string(std::string_view name) {
  for (Scheme s : {Scheme::cutset, Scheme::df, Scheme::cf, Scheme::pdcf, Scheme::capacity}) {
    if (to_string(s) == name) return s;
  }
  throw UsageError("unknown scheme '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Parallel binary symmetric MRC-D

RatePoint parallel_binary_cutset(const ParallelBinaryMrcd& m) {
  m.validate();
  return point(Scheme::cutset, std::min(m.r1, 2.0 * (1.0 - binary_entropy(m.delta))));
}

RatePoint parallel_binary_df(const ParallelBinaryMrcd& m) {
  m.validate();
  const double inner = 2.0 - binary_entropy(star(m.delta, m.p_z)) - binary_entropy(m.delta);
  return point(Scheme::df, std::min(m.r1, inner));
}

RatePoint parallel_binary_cf(const ParallelBinaryMrcd& m) {
  m.validate();
  // Beyond r1 = 2 both outputs are forwarded losslessly.
  const double nu = m.r1 >= 2.0 ? 0.0 : inv_binary_entropy(1.0 - m.r1 / 2.0);
  RatePoint p = point(Scheme::cf, 2.0 * (1.0 - binary_entropy(star(m.delta, nu))));
  p.meta["nu"] = nu;
  return p;
}

RatePoint parallel_binary_pdcf(const ParallelBinaryMrcd& m) {
  m.validate();
  const double h = binary_entropy(m.delta);
  const double nu = inv_h2_clamped(2.0 - h - m.r1);
  RatePoint p = point(Scheme::pdcf, std::min(m.r1, 2.0 - h - binary_entropy(star(m.delta, nu))));
  p.meta["nu"] = nu;
  return p;
}

double parallel_binary_df_pdcf_crossover(double p_z, double r1) {
  ParallelBinaryMrcd{0.0, p_z, r1}.validate();
  return inv_h2_clamped(2.0 - binary_entropy(p_z) - r1);
}

double parallel_binary_pdcf_cutset_threshold(double r1) {
  ParallelBinaryMrcd{0.0, 0.0, r1}.validate();
  return inv_h2_clamped(2.0 - r1);
}

// ---------------------------------------------------------------------------
// Binary symmetric MRC-D

RatePoint binary_cutset(const BinaryMrcd& m) {
  m.validate();
  return point(Scheme::cutset, std::min(m.r1, 1.0 - binary_entropy(m.delta)));
}

RatePoint binary_df(const BinaryMrcd& m) {
  m.validate();
  return point(Scheme::df, std::min(m.r1, 1.0 - binary_entropy(star(m.delta, m.p_z))));
}

RatePoint binary_cf(const BinaryMrcd& m) {
  m.validate();
  const double nu = inv_h2_clamped(1.0 - m.r1);
  RatePoint p = point(Scheme::cf, 1.0 - binary_entropy(star(m.delta, nu)));
  p.meta["nu"] = nu;
  return p;
}

double binary_pdcf_threshold(double r1) {
  BinaryMrcd{0.0, 0.0, r1}.validate();
  return inv_h2_clamped(1.0 - r1);
}

RatePoint binary_pdcf(const BinaryMrcd& m) {
  const RatePoint df = binary_df(m);
  const RatePoint cf = binary_cf(m);
  const double threshold = binary_pdcf_threshold(m.r1);
  RatePoint p = point(Scheme::pdcf, std::max(df.value, cf.value));
  p.branch = m.p_z <= threshold ? "df" : "cf";
  p.meta["threshold_p_z"] = threshold;
  if (p.branch == "cf") p.meta["nu"] = cf.meta.at("nu");
  return p;
}

RatePoint binary_capacity_pz_half(const BinaryMrcd& m) {
  m.validate();
  if (std::abs(m.p_z - 0.5) > kEdge) {
    throw UsageError("closed-form capacity requires p_z = 0.5, got " + std::to_string(m.p_z));
  }
  RatePoint p = binary_cf(m);
  p.scheme = Scheme::capacity;
  return p;
}

double g_alpha(double alpha, double delta, double r1) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw DomainError("delta must lie in [0, 1/2]");
  if (!(r1 >= 0.0)) throw DomainError("r1 must be nonnegative");
  if (!(alpha >= r1 / 2.0 - kEdge && alpha <= 1.0 + r1 / 2.0 + kEdge)) {
    throw DomainError("alpha outside [r1/2, 1 + r1/2]");
  }
  const double u = std::clamp(alpha - r1 / 2.0, 0.0, 1.0);
  return alpha - binary_entropy(star(delta, inv_binary_entropy(u)));
}

// ---------------------------------------------------------------------------
// Gaussian MRC-D

RatePoint gaussian_cutset(const GaussianMrcd& m) {
  m.validate();
  const double residual = 1.0 - m.rho * m.rho;
  // Perfect state knowledge removes the noise entirely.
  const double inner = residual <= 0.0 ? std::numeric_limits<double>::infinity()
                                       : 0.5 * std::log2(1.0 + m.power / residual);
  return point(Scheme::cutset, std::min(m.r1, inner));
}

RatePoint gaussian_df(const GaussianMrcd& m) {
  m.validate();
  return point(Scheme::df, std::min(m.r1, 0.5 * std::log2(1.0 + m.power)));
}

RatePoint gaussian_cf(const GaussianMrcd& m) {
  m.validate();
  const double residual = std::max(1.0 - m.rho * m.rho, 0.0);
  const double link = std::exp2(2.0 * m.r1);
  const double value = m.r1 - 0.5 * std::log2((m.power + link * residual) / (m.power + residual));
  RatePoint p = point(Scheme::cf, value);
  if (m.r1 > 0.0) p.meta["sigma_q_sq"] = gaussian_f(0.0, m);
  p.meta["alpha_star"] = 0.0;
  return p;
}

double gaussian_pdcf_threshold(const GaussianMrcd& m) {
  m.validate();
  return std::exp2(-2.0 * m.r1) * (1.0 + m.power);
}

RatePoint gaussian_pdcf(const GaussianMrcd& m) {
  const RatePoint df = gaussian_df(m);
  const RatePoint cf = gaussian_cf(m);
  RatePoint p = point(Scheme::pdcf, std::max(df.value, cf.value));
  const bool df_branch = m.rho * m.rho <= gaussian_pdcf_threshold(m);
  p.branch = df_branch ? "df" : "cf";
  p.meta["alpha_star"] = df_branch ? 1.0 : 0.0;
  if (!df_branch && cf.meta.contains("sigma_q_sq")) p.meta["sigma_q_sq"] = cf.meta.at("sigma_q_sq");
  return p;
}

double gaussian_alpha_max(const GaussianMrcd& m) {
  m.validate();
  return std::min((1.0 - std::exp2(-2.0 * m.r1)) * (1.0 + 1.0 / m.power), 1.0);
}

double gaussian_f(double alpha, const GaussianMrcd& m) {
  m.validate();
  const double abar = 1.0 - alpha;
  const double denom = std::exp2(2.0 * m.r1) * (abar * m.power + 1.0) - (m.power + 1.0);
  if (denom <= 0.0) throw DomainError("compression noise undefined: no rate left for the compressed layer");
  return (m.power + 1.0) * (abar * m.power + 1.0 - m.rho * m.rho) / denom;
}

double gaussian_G(double alpha, const GaussianMrcd& m) {
  m.validate();
  if (!(alpha >= -kEdge && alpha <= gaussian_alpha_max(m) + kEdge)) {
    throw DomainError("alpha outside [0, alpha_max]");
  }
  const double abar = 1.0 - std::clamp(alpha, 0.0, 1.0);
  const double residual = 1.0 - m.rho * m.rho;
  const double link = std::exp2(2.0 * m.r1);
  const double p = m.power;
  const double denom = residual * link * (1.0 + abar * p) + abar * p * (1.0 + p);
  if (denom <= 0.0) throw DomainError("G(alpha) undefined at alpha = 1 with |rho| = 1");
  return link * (1.0 + p) * (residual + abar * p) / denom;
}

// ---------------------------------------------------------------------------
// Sweeps

RatePoint evaluate(Scheme scheme, const RateFamily& model) {
  return std::visit(
      [scheme](const auto& m) -> RatePoint {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ParallelBinaryMrcd>) {
          switch (scheme) {
            case Scheme::cutset: return parallel_binary_cutset(m);
            case Scheme::df: return parallel_binary_df(m);
            case Scheme::cf: return parallel_binary_cf(m);
            case Scheme::pdcf: return parallel_binary_pdcf(m);
            case Scheme::capacity: break;
          }
        } else if constexpr (std::is_same_v<T, BinaryMrcd>) {
          switch (scheme) {
            case Scheme::cutset: return binary_cutset(m);
            case Scheme::df: return binary_df(m);
            case Scheme::cf: return binary_cf(m);
            case Scheme::pdcf: return binary_pdcf(m);
            case Scheme::capacity: return binary_capacity_pz_half(m);
          }
        } else {
          switch (scheme) {
            case Scheme::cutset: return gaussian_cutset(m);
            case Scheme::df: return gaussian_df(m);
            case Scheme::cf: return gaussian_cf(m);
            case Scheme::pdcf: return gaussian_pdcf(m);
            case Scheme::capacity: break;
          }
        }
        throw UsageError("scheme '" + std::string(to_string(scheme)) + "' has no closed form for this model");
      },
      model);
}

namespace {

bool has_capacity(const RateFamily& model) {
  const auto* b = std::get_if<BinaryMrcd>(&model);
  return b != nullptr && std::abs(b->p_z - 0.5) <= kEdge;
}

double* parameter(RateFamily& model, const std::string& name) {
  return std::visit(
      [&name](auto& m) -> double* {
        using T = std::decay_t<decltype(m)>;
        if (name == "r1") return &m.r1;
        if constexpr (std::is_same_v<T, GaussianMrcd>) {
          if (name == "power") return &m.power;
          if (name == "rho") return &m.rho;
        } else {
          if (name == "delta") return &m.delta;
          if (name == "p_z") return &m.p_z;
        }
        return nullptr;
      },
      model);
}

}  // namespace

std::vector<RatePoint> evaluate_schemes(const RateFamily& model) {
  std::vector<RatePoint> out;
  for (Scheme s : {Scheme::cutset, Scheme::df, Scheme::cf, Scheme::pdcf}) out.push_back(evaluate(s, model));
  if (has_capacity(model)) out.push_back(evaluate(Scheme::capacity, model));
  return out;
}

const std::vector<RatePoint>& RateCurve::column(Scheme s) const {
  const auto it = points.find(s);
  if (it == points.end()) throw UsageError("curve has no '" + std::string(to_string(s)) + "' column");
  return it->second;
}

RateCurve sweep(const RateFamily& base, const std::string& param, const std::vector<double>& grid) {
  RateFamily probe = base;
  if (parameter(probe, param) == nullptr) throw UsageError("unknown sweep parameter '" + param + "'");
  if (grid.empty()) throw UsageError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw UsageError("sweep grid must be strictly increasing");
  }

  RateCurve curve;
  curve.param_name = param;
  curve.param_values = grid;
  std::vector<RateFamily> models;
  bool capacity_everywhere = true;
  for (double v : grid) {
    RateFamily m = base;
    *parameter(m, param) = v;
    capacity_everywhere = capacity_everywhere && has_capacity(m);
    models.push_back(std::move(m));
  }
  std::vector<Scheme> schemes{Scheme::cutset, Scheme::df, Scheme::cf, Scheme::pdcf};
  if (capacity_everywhere) schemes.push_back(Scheme::capacity);
  for (Scheme s : schemes) {
    auto& column = curve.points[s];
    column.reserve(models.size());
    for (const RateFamily& m : models) column.push_back(evaluate(s, m));
  }
  return curve;
}

std::vector<double> linspace(double start, double stop, std::size_t steps) {
  if (steps < 2) throw UsageError("grid needs at least 2 steps");
  std::vector<double> out(steps);
  const double step = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) out[i] = start + step * static_cast<double>(i);
  out.back() = stop;
  return out;
}

}  // namespace orcd
