#pragma once

#include <ostream>
#include <string>

#include "orcd/rates.hpp"

namespace orcd {

/// Locale-independent decimal, 12 significant digits.
std::string format_decimal(double v);

/// Header row `<param>,cutset,df,cf,pdcf[,capacity]`, one row per grid point.
void write_curve_csv(const RateCurve& curve, std::ostream& out);

/// Mirrors RateCurve: param_name, param_values, points[scheme][i].
std::string curve_to_json(const RateCurve& curve, int indent = 2);

}  // namespace orcd
