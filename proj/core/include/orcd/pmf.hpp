#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace orcd {

/// Tolerance used when validating that probabilities sum to one.
inline constexpr double kPmfTolerance = 1e-9;

/// A finite probability vector. Construction validates the entries and
/// renormalizes away the small drift left by text round-trips.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  static Pmf uniform(std::size_t n);
  static Pmf point_mass(std::size_t n, std::size_t at);
  static Pmf bernoulli(double p);  // [1-p, p]

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  std::vector<double> probs_;
};

/// Multi-axis probability table stored row-major (last axis fastest).
class JointPmf {
 public:
  JointPmf(std::vector<std::size_t> dims, std::vector<double> table,
           std::vector<std::string> axis_labels = {});

  std::size_t rank() const noexcept { return dims_.size(); }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::span<const double> table() const noexcept { return table_; }
  std::span<const std::string> axis_labels() const noexcept { return labels_; }

  /// Index of the axis carrying `label`; throws UsageError if absent.
  std::size_t axis(const std::string& label) const;

  double at(std::span<const std::size_t> index) const;

  /// Marginal over `axes`, in the order given.
  JointPmf marginal(std::span<const std::size_t> axes) const;

  /// Joint entropy of the variables on `axes` (empty set gives 0).
  double entropy_of(std::span<const std::size_t> axes) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> table_;
  std::vector<std::string> labels_;
};

/// Conditional distribution T(out | in): column `in` is a pmf over outputs.
class StochasticMatrix {
 public:
  StochasticMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t out, std::size_t in) const { return entries_[out * cols_ + in]; }

  /// Output distribution induced by input pmf `q`.
  Pmf apply(const Pmf& q) const;

  static StochasticMatrix bsc(double delta);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

}  // namespace orcd
