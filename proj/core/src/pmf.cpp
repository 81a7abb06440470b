#include "orcd/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orcd/errors.hpp"
#include "orcd/info.hpp"

namespace orcd {
namespace {

double checked_sum(std::span<const double> v, const char* what) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double p = v[i];
    if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kPmfTolerance) {
      throw ValidationError(std::string(what) + " entry " + std::to_string(i) +
                            " is not a probability: " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPmfTolerance) {
    throw ValidationError(std::string(what) + " sums to " + std::to_string(sum) + ", not 1");
  }
  return sum;
}

void renormalize(std::vector<double>& v, double sum) {
  for (double& p : v) p = std::min(p / sum, 1.0);
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("pmf must have at least one entry");
  renormalize(probs_, checked_sum(probs_, "pmf"));
}

Pmf Pmf::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("pmf must have at least one entry");
  return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::point_mass(std::size_t n, std::size_t at) {
  if (at >= n) throw ValidationError("point mass index out of range");
  std::vector<double> v(n, 0.0);
  v[at] = 1.0;
  return Pmf(std::move(v));
}

Pmf Pmf::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bernoulli parameter outside [0,1]");
  return Pmf({1.0 - p, p});
}

JointPmf::JointPmf(std::vector<std::size_t> dims, std::vector<double> table,
                   std::vector<std::string> axis_labels)
    : dims_(std::move(dims)), table_(std::move(table)), labels_(std::move(axis_labels)) {
  if (dims_.empty()) throw ValidationError("joint pmf needs at least one axis");
  std::size_t cells = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw ValidationError("joint pmf axis of size 0");
    cells *= d;
  }
  if (cells != table_.size()) {
    throw ValidationError("joint pmf table has " + std::to_string(table_.size()) +
                          " cells, dims require " + std::to_string(cells));
  }
  if (!labels_.empty() && labels_.size() != dims_.size()) {
    throw ValidationError("joint pmf needs one label per axis");
  }
  renormalize(table_, checked_sum(table_, "joint pmf"));
}

std::size_t JointPmf::axis(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UsageError("no axis labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

double JointPmf::at(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw UsageError("index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw UsageError("index out of range");
    flat = flat * dims_[k] + index[k];
  }
  return table_[flat];
}

namespace {

// Accumulates the marginal over `axes` into a dense vector, marginal row-major
// in the order of `axes`.
std::vector<double> marginal_table(std::span<const std::size_t> dims,
                                   std::span<const double> table,
                                   std::span<const std::size_t> axes) {
  const std::size_t rank = dims.size();
  std::vector<std::size_t> mstride(rank, 0);
  std::vector<bool> seen(rank, false);
  std::size_t msize = 1;
  for (std::size_t i = axes.size(); i-- > 0;) {
    const std::size_t a = axes[i];
    if (a >= rank) throw UsageError("axis " + std::to_string(a) + " out of range");
    if (seen[a]) throw UsageError("axis " + std::to_string(a) + " listed twice");
    seen[a] = true;
    mstride[a] = msize;
    msize *= dims[a];
  }

  std::vector<double> out(msize, 0.0);
  std::vector<std::size_t> idx(rank, 0);
  std::size_t offset = 0;
  for (double p : table) {
    out[offset] += p;
    for (std::size_t k = rank; k-- > 0;) {
      if (++idx[k] < dims[k]) {
        offset += mstride[k];
        break;
      }
      offset -= mstride[k] * (dims[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

}  // namespace

JointPmf JointPmf::marginal(std::span<const std::size_t> axes) const {
  if (axes.empty()) throw UsageError("marginal over an empty axis set");
  std::vector<std::size_t> mdims;
  std::vector<std::string> mlabels;
  for (std::size_t a : axes) {
    if (a >= dims_.size()) throw UsageError("axis " + std::to_string(a) + " out of range");
    mdims.push_back(dims_[a]);
    if (!labels_.empty()) mlabels.push_back(labels_[a]);
  }
  return JointPmf(std::move(mdims), marginal_table(dims_, table_, axes), std::move(mlabels));
}

double JointPmf::entropy_of(std::span<const std::size_t> axes) const {
  if (axes.empty()) return 0.0;
  return entropy(marginal_table(dims_, table_, axes));
}

StochasticMatrix::StochasticMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw ValidationError("stochastic matrix with empty dimension");
  if (entries_.size() != rows_ * cols_) throw ValidationError("stochastic matrix size mismatch");
  for (std::size_t i = 0; i < cols_; ++i) {
    std::vector<double> column(rows_);
    for (std::size_t j = 0; j < rows_; ++j) column[j] = entries_[j * cols_ + i];
    const std::string what = "column " + std::to_string(i);
    const double sum = checked_sum(column, what.c_str());
    for (std::size_t j = 0; j < rows_; ++j) entries_[j * cols_ + i] = std::min(column[j] / sum, 1.0);
  }
}

Pmf StochasticMatrix::apply(const Pmf& q) const {
  if (q.size() != cols_) throw UsageError("input pmf size does not match matrix columns");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t j = 0; j < rows_; ++j) {
    for (std::size_t i = 0; i < cols_; ++i) out[j] += (*this)(j, i) * q[i];
  }
  return Pmf(std::move(out));
}

StochasticMatrix StochasticMatrix::bsc(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("crossover outside [0,1]");
  return StochasticMatrix(2, 2, {1.0 - delta, delta, delta, 1.0 - delta});
}

}  // namespace orcd
