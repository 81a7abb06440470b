#include "orcd/models.hpp"

#include <cmath>
#include <string>

#include "orcd/blahut_arimoto.hpp"
#include "orcd/errors.hpp"

namespace orcd {
namespace {

void require_range(double v, double lo, double hi, const char* field) {
  if (!(v >= lo && v <= hi)) {
    throw ValidationError("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]",
                          field);
  }
}

void require_nonnegative_finite(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ValidationError("value " + std::to_string(v) + " must be finite and >= 0", field);
  }
}

double bsc(std::size_t in, std::size_t out, double delta) { return in == out ? 1.0 - delta : delta; }

}  // namespace

StateChannel::StateChannel(std::size_t inputs, std::size_t states, std::size_t outputs,
                           std::vector<double> table)
    : inputs_(inputs), states_(states), outputs_(outputs), table_(std::move(table)) {
  if (inputs_ == 0 || states_ == 0 || outputs_ == 0) {
    throw ValidationError("channel alphabets must be nonempty");
  }
  if (table_.size() != inputs_ * states_ * outputs_) {
    throw ValidationError("channel table has " + std::to_string(table_.size()) + " entries, expected " +
                          std::to_string(inputs_ * states_ * outputs_));
  }
  for (std::size_t x = 0; x < inputs_; ++x) {
    for (std::size_t z = 0; z < states_; ++z) {
      const std::size_t base = (x * states_ + z) * outputs_;
      std::vector<double> row(table_.begin() + static_cast<std::ptrdiff_t>(base),
                              table_.begin() + static_cast<std::ptrdiff_t>(base + outputs_));
      try {
        const Pmf validated(std::move(row));
        for (std::size_t y = 0; y < outputs_; ++y) table_[base + y] = validated[y];
      } catch (const ValidationError& e) {
        throw ValidationError(e.message(), "/" + std::to_string(x) + "/" + std::to_string(z));
      }
    }
  }
}

StateChannel StateChannel::from_function(
    std::size_t inputs, std::size_t states, std::size_t outputs,
    const std::function<double(std::size_t, std::size_t, std::size_t)>& law) {
  std::vector<double> table;
  table.reserve(inputs * states * outputs);
  for (std::size_t x = 0; x < inputs; ++x)
    for (std::size_t z = 0; z < states; ++z)
      for (std::size_t y = 0; y < outputs; ++y) table.push_back(law(x, z, y));
  return StateChannel(inputs, states, outputs, std::move(table));
}

StateChannel StateChannel::trivial(std::size_t states) {
  return StateChannel(1, states, 1, std::vector<double>(states, 1.0));
}

StochasticMatrix StateChannel::with_state(const Pmf& p_z) const {
  if (p_z.size() != states_) throw UsageError("state pmf does not match channel");
  const std::size_t rows = outputs_ * states_;
  std::vector<double> w(rows * inputs_, 0.0);
  for (std::size_t x = 0; x < inputs_; ++x)
    for (std::size_t z = 0; z < states_; ++z)
      for (std::size_t y = 0; y < outputs_; ++y) w[(y * states_ + z) * inputs_ + x] = p_z[z] * (*this)(x, z, y);
  return StochasticMatrix(rows, inputs_, std::move(w));
}

StochasticMatrix StateChannel::averaged(const Pmf& p_z) const {
  if (p_z.size() != states_) throw UsageError("state pmf does not match channel");
  std::vector<double> w(outputs_ * inputs_, 0.0);
  for (std::size_t x = 0; x < inputs_; ++x)
    for (std::size_t z = 0; z < states_; ++z)
      for (std::size_t y = 0; y < outputs_; ++y) w[y * inputs_ + x] += p_z[z] * (*this)(x, z, y);
  return StochasticMatrix(outputs_, inputs_, std::move(w));
}

DiscreteOrcd::DiscreteOrcd(Pmf p_z, StateChannel chan_sr, StateChannel chan_rd, StateChannel chan_sd,
                           std::optional<double> relay_pipe_rate)
    : p_z_(std::move(p_z)),
      chan_sr_(std::move(chan_sr)),
      chan_rd_(std::move(chan_rd)),
      chan_sd_(std::move(chan_sd)),
      relay_pipe_rate_(relay_pipe_rate) {
  const std::size_t nz = p_z_.size();
  if (chan_sr_.states() != nz) throw ValidationError("state alphabet differs from p_z", "chan_sr");
  if (chan_rd_.states() != nz) throw ValidationError("state alphabet differs from p_z", "chan_rd");
  if (chan_sd_.states() != nz) throw ValidationError("state alphabet differs from p_z", "chan_sd");
  if (relay_pipe_rate_) require_nonnegative_finite(*relay_pipe_rate_, "r1");
}

Alphabets DiscreteOrcd::alphabets() const {
  return Alphabets{chan_sr_.inputs(),  chan_sd_.inputs(),  chan_rd_.inputs(), chan_sr_.outputs(),
                   chan_rd_.outputs(), chan_sd_.outputs(), p_z_.size()};
}

void ParallelBinaryMrcd::validate() const {
  require_range(delta, 0.0, 0.5, "delta");
  require_range(p_z, 0.0, 1.0, "p_z");
  require_nonnegative_finite(r1, "r1");
}

void BinaryMrcd::validate() const {
  require_range(delta, 0.0, 0.5, "delta");
  require_range(p_z, 0.0, 1.0, "p_z");
  require_nonnegative_finite(r1, "r1");
}

void GaussianMrcd::validate() const {
  if (!std::isfinite(power) || power <= 0.0) {
    throw ValidationError("value " + std::to_string(power) + " must be finite and > 0", "power");
  }
  require_range(rho, -1.0, 1.0, "rho");
  require_nonnegative_finite(r1, "r1");
}

LinkCapacities link_capacities(const DiscreteOrcd& m) {
  LinkCapacities out;
  if (m.relay_pipe_rate()) {
    out.r1 = *m.relay_pipe_rate();
    out.argmax_pxr = Pmf::uniform(m.chan_rd().inputs());
  } else {
    const ChannelCapacity c = blahut_arimoto(m.chan_rd().with_state(m.p_z()));
    out.r1 = c.capacity;
    out.argmax_pxr = c.input;
  }
  const ChannelCapacity c2 = blahut_arimoto(m.chan_sd().with_state(m.p_z()));
  out.r2 = c2.capacity;
  out.argmax_px2 = c2.input;
  return out;
}

SourceRelayCapacity source_relay_capacity(const DiscreteOrcd& m) {
  const ChannelCapacity c = blahut_arimoto(m.chan_sr().with_state(m.p_z()));
  return {c.capacity, c.input};
}

DiscreteOrcd reduce_to_mrcd(const DiscreteOrcd& m) {
  return DiscreteOrcd(m.p_z(), m.chan_sr(), m.chan_rd(), StateChannel::trivial(m.p_z().size()),
                      m.relay_pipe_rate());
}

DiscreteOrcd embed_parallel_binary(const ParallelBinaryMrcd& p) {
  p.validate();
  auto law = [&](std::size_t x, std::size_t z, std::size_t y) {
    const std::size_t x1 = x >> 1, x2 = x & 1;
    const std::size_t y1 = y >> 1, y2 = y & 1;
    return bsc(x1 ^ z, y1, p.delta) * bsc(x2, y2, p.delta);
  };
  return DiscreteOrcd(Pmf::bernoulli(p.p_z), StateChannel::from_function(4, 2, 4, law),
                      StateChannel::trivial(2), StateChannel::trivial(2), p.r1);
}

DiscreteOrcd embed_binary(const BinaryMrcd& p) {
  p.validate();
  auto law = [&](std::size_t x, std::size_t z, std::size_t y) { return bsc(x ^ z, y, p.delta); };
  return DiscreteOrcd(Pmf::bernoulli(p.p_z), StateChannel::from_function(2, 2, 2, law),
                      StateChannel::trivial(2), StateChannel::trivial(2), p.r1);
}

}  // namespace orcd
