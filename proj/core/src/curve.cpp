#include "orcd/curve_io.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace orcd {

std::string format_decimal(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_curve_csv(const RateCurve& curve, std::ostream& out) {
  out << curve.param_name;
  for (const auto& [scheme, column] : curve.points) out << ',' << to_string(scheme);
  out << '\n';
  for (std::size_t i = 0; i < curve.param_values.size(); ++i) {
    out << format_decimal(curve.param_values[i]);
    for (const auto& [scheme, column] : curve.points) out << ',' << format_decimal(column[i].value);
    out << '\n';
  }
}

std::string curve_to_json(const RateCurve& curve, int indent) {
  using json = nlohmann::ordered_json;
  json points = json::object();
  for (const auto& [scheme, column] : curve.points) {
    json col = json::array();
    for (const RatePoint& p : column) {
      json entry = {{"value", p.value}};
      if (!p.meta.empty()) {
        json meta = json::object();
        for (const auto& [k, v] : p.meta) {
          if (std::isfinite(v)) meta[k] = v;
        }
        entry["meta"] = std::move(meta);
      }
      if (!p.branch.empty()) entry["branch"] = p.branch;
      col.push_back(std::move(entry));
    }
    points[std::string(to_string(scheme))] = std::move(col);
  }
  json doc = {{"param_name", curve.param_name}, {"param_values", curve.param_values}, {"points", std::move(points)}};
  return doc.dump(indent);
}

}  // namespace orcd
