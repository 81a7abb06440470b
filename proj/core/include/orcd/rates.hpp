#pragma once

// Closed-form rates and bounds for the multihop (MRC-D) example channels.
// Every rate is in bits per channel use and clamped at zero from below.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orcd/models.hpp"

namespace orcd {

enum class Scheme { cutset, df, cf, pdcf, capacity };

std::string_view to_string(Scheme s);
Scheme scheme_from_string(std::string_view name);

struct RatePoint {
  Scheme scheme = Scheme::cutset;
  double value = 0.0;
  std::map<std::string, double> meta;
  std::string branch;  // "df" / "cf" for the piecewise pDCF forms, else empty
};

// Parallel binary symmetric MRC-D.
RatePoint parallel_binary_cutset(const ParallelBinaryMrcd& m);
RatePoint parallel_binary_df(const ParallelBinaryMrcd& m);
RatePoint parallel_binary_cf(const ParallelBinaryMrcd& m);
/// Lower bound from decoding X1^2 and compressing Y_R^1.
RatePoint parallel_binary_pdcf(const ParallelBinaryMrcd& m);

/// delta below which DF beats the pDCF lower bound: h2^-1(2 - h2(p_z) - r1).
double parallel_binary_df_pdcf_crossover(double p_z, double r1);
/// delta from which the pDCF lower bound meets the cut-set bound: h2^-1(2 - r1).
double parallel_binary_pdcf_cutset_threshold(double r1);

// Binary symmetric MRC-D.
RatePoint binary_cutset(const BinaryMrcd& m);
RatePoint binary_df(const BinaryMrcd& m);
RatePoint binary_cf(const BinaryMrcd& m);
RatePoint binary_pdcf(const BinaryMrcd& m);
/// Capacity for Z ~ Ber(1/2); UsageError for any other p_z.
RatePoint binary_capacity_pz_half(const BinaryMrcd& m);
/// p_z at which the binary pDCF switches from DF to CF: h2^-1(1 - r1).
double binary_pdcf_threshold(double r1);

/// alpha - h2(delta * h2^-1(alpha - r1/2)) on [r1/2, 1 + r1/2].
double g_alpha(double alpha, double delta, double r1);

// Gaussian MRC-D with jointly Gaussian auxiliaries.
RatePoint gaussian_cutset(const GaussianMrcd& m);
RatePoint gaussian_df(const GaussianMrcd& m);
RatePoint gaussian_cf(const GaussianMrcd& m);
RatePoint gaussian_pdcf(const GaussianMrcd& m);

/// rho^2 above which CF beats DF: 2^{-2 r1} (1 + P).
double gaussian_pdcf_threshold(const GaussianMrcd& m);
/// Largest alpha (power fraction on the decoded layer) with f(alpha) >= 0.
double gaussian_alpha_max(const GaussianMrcd& m);
/// Smallest admissible compression noise variance for power split alpha.
double gaussian_f(double alpha, const GaussianMrcd& m);
/// Rate R(alpha) = 1/2 log2 G(alpha) with the compression noise at f(alpha).
double gaussian_G(double alpha, const GaussianMrcd& m);

using RateFamily = std::variant<ParallelBinaryMrcd, BinaryMrcd, GaussianMrcd>;

/// Every scheme defined for the family at this parameter point.
std::vector<RatePoint> evaluate_schemes(const RateFamily& model);

struct RateCurve {
  std::string param_name;
  std::vector<double> param_values;
  std::map<Scheme, std::vector<RatePoint>> points;

  const std::vector<RatePoint>& column(Scheme s) const;
};

/// UsageError if the scheme is not defined for this model.
RatePoint evaluate(Scheme scheme, const RateFamily& model);

/// Evaluates every scheme over `grid` for parameter `param` of `base`.
/// `grid` must be strictly increasing; unknown parameters raise UsageError.
RateCurve sweep(const RateFamily& base, const std::string& param, const std::vector<double>& grid);

std::vector<double> linspace(double start, double stop, std::size_t steps);

}  // namespace orcd
