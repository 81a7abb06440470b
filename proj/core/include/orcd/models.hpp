#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "orcd/pmf.hpp"

namespace orcd {

struct Alphabets {
  std::size_t x1 = 1;
  std::size_t x2 = 1;
  std::size_t xr = 1;
  std::size_t yr = 1;
  std::size_t y1 = 1;
  std::size_t y2 = 1;
  std::size_t z = 1;

  friend bool operator==(const Alphabets&, const Alphabets&) = default;
};

/// State-dependent channel p(out | in, z), stored row-major as [in][z][out].
class StateChannel {
 public:
  StateChannel(std::size_t inputs, std::size_t states, std::size_t outputs, std::vector<double> table);

  static StateChannel from_function(std::size_t inputs, std::size_t states, std::size_t outputs,
                                    const std::function<double(std::size_t, std::size_t, std::size_t)>& law);

  /// Single input, single output: carries zero bits.
  static StateChannel trivial(std::size_t states);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t states() const noexcept { return states_; }
  std::size_t outputs() const noexcept { return outputs_; }
  std::span<const double> table() const noexcept { return table_; }

  double operator()(std::size_t in, std::size_t z, std::size_t out) const {
    return table_[(in * states_ + z) * outputs_ + out];
  }

  /// Channel in -> (out, z), output index out * states + z, for Z ~ p_z
  /// independent of the input.
  StochasticMatrix with_state(const Pmf& p_z) const;

  /// Channel in -> out with the state averaged out.
  StochasticMatrix averaged(const Pmf& p_z) const;

  friend bool operator==(const StateChannel&, const StateChannel&) = default;

 private:
  std::size_t inputs_;
  std::size_t states_;
  std::size_t outputs_;
  std::vector<double> table_;
};

/// Orthogonal relay channel with state known at the destination.
/// chan_sr = p(y_R | x1, z), chan_rd = p(y1 | x_R, z), chan_sd = p(y2 | x2, z).
/// When `relay_pipe_rate` is set, the relay-destination link is an ideal bit
/// pipe of that rate and chan_rd is ignored for R1.
class DiscreteOrcd {
 public:
  DiscreteOrcd(Pmf p_z, StateChannel chan_sr, StateChannel chan_rd, StateChannel chan_sd,
               std::optional<double> relay_pipe_rate = std::nullopt);

  Alphabets alphabets() const;
  const Pmf& p_z() const noexcept { return p_z_; }
  const StateChannel& chan_sr() const noexcept { return chan_sr_; }
  const StateChannel& chan_rd() const noexcept { return chan_rd_; }
  const StateChannel& chan_sd() const noexcept { return chan_sd_; }
  std::optional<double> relay_pipe_rate() const noexcept { return relay_pipe_rate_; }

  friend bool operator==(const DiscreteOrcd&, const DiscreteOrcd&) = default;

 private:
  Pmf p_z_;
  StateChannel chan_sr_;
  StateChannel chan_rd_;
  StateChannel chan_sd_;
  std::optional<double> relay_pipe_rate_;
};

/// Two parallel BSC(delta) source-relay links; Z ~ Ber(p_z) flips the first.
struct ParallelBinaryMrcd {
  double delta = 0.0;
  double p_z = 0.0;
  double r1 = 0.0;

  void validate() const;
};

/// Y_R = X1 + N + Z (mod 2), N ~ Ber(delta), Z ~ Ber(p_z).
struct BinaryMrcd {
  double delta = 0.0;
  double p_z = 0.0;
  double r1 = 0.0;

  void validate() const;
};

/// Y_R = X1 + V with (Z, V) unit-variance jointly Gaussian, correlation rho.
struct GaussianMrcd {
  double power = 1.0;
  double rho = 0.0;
  double r1 = 0.0;

  void validate() const;
};

struct LinkCapacities {
  double r1 = 0.0;
  double r2 = 0.0;
  Pmf argmax_pxr = Pmf::uniform(1);
  Pmf argmax_px2 = Pmf::uniform(1);
};

/// R1 = max I(X_R; Y1 | Z), R2 = max I(X2; Y2 | Z), via Blahut-Arimoto.
LinkCapacities link_capacities(const DiscreteOrcd& m);

/// max over p(x1) of I(X1; Y_R | Z), with the maximizing input.
struct SourceRelayCapacity {
  double value = 0.0;
  Pmf argmax_px1 = Pmf::uniform(1);
};
SourceRelayCapacity source_relay_capacity(const DiscreteOrcd& m);

/// Drops the direct link (|X2| = |Y2| = 1).
DiscreteOrcd reduce_to_mrcd(const DiscreteOrcd& m);

/// X1 = (X1^1, X1^2) and Y_R = (Y_R^1, Y_R^2) indexed as 2*first + second.
DiscreteOrcd embed_parallel_binary(const ParallelBinaryMrcd& p);
DiscreteOrcd embed_binary(const BinaryMrcd& p);

}  // namespace orcd
