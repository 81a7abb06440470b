#include <algorithm>
#include <cmath>

#include "orcd/blahut_arimoto.hpp"
#include "orcd/info.hpp"
#include "orcd/solver.hpp"

namespace orcd {
namespace {

constexpr double kTol = 1e-9;

// Y_R independent of Z given any input: every row identical across the
// states that actually occur.
bool state_free(const DiscreteOrcd& m) {
  const StateChannel& c = m.chan_sr();
  const Pmf& pz = m.p_z();
  for (std::size_t x = 0; x < c.inputs(); ++x) {
    std::size_t ref = pz.size();
    for (std::size_t z = 0; z < c.states(); ++z) {
      if (pz[z] <= 0.0) continue;
      if (ref == pz.size()) {
        ref = z;
        continue;
      }
      for (std::size_t y = 0; y < c.outputs(); ++y) {
        if (std::abs(c(x, z, y) - c(x, ref, y)) > kTol) return false;
      }
    }
  }
  return true;
}

bool deterministic(const DiscreteOrcd& m) {
  const StateChannel& c = m.chan_sr();
  for (std::size_t x = 0; x < c.inputs(); ++x)
    for (std::size_t z = 0; z < c.states(); ++z) {
      if (m.p_z()[z] <= 0.0) continue;
      double peak = 0.0;
      for (std::size_t y = 0; y < c.outputs(); ++y) peak = std::max(peak, c(x, z, y));
      if (peak < 1.0 - kTol) return false;
    }
  return true;
}

// H(Y_R | Z) for input pmf p(x1).
double output_entropy_given_state(const DiscreteOrcd& m, const Pmf& px) {
  const StateChannel& c = m.chan_sr();
  double h = 0.0;
  for (std::size_t z = 0; z < c.states(); ++z) {
    const double pz = m.p_z()[z];
    if (pz <= 0.0) continue;
    std::vector<double> py(c.outputs(), 0.0);
    for (std::size_t x = 0; x < c.inputs(); ++x)
      for (std::size_t y = 0; y < c.outputs(); ++y) py[y] += px[x] * c(x, z, y);
    h += pz * entropy(py);
  }
  return h;
}

}  // namespace

std::string to_string(TightnessCase c) {
  switch (c) {
    case TightnessCase::case1: return "Case1";
    case TightnessCase::case2: return "Case2";
    case TightnessCase::case3: return "Case3";
    case TightnessCase::case4: return "Case4";
  }
  return "?";
}

std::set<TightnessCase> classify_cutset_tightness(const DiscreteOrcd& m) {
  std::set<TightnessCase> out;
  const double r1 = link_capacities(m).r1;
  if (state_free(m)) out.insert(TightnessCase::case1);
  if (deterministic(m)) out.insert(TightnessCase::case2);
  if (blahut_arimoto(m.chan_sr().averaged(m.p_z())).capacity >= r1 - kTol) out.insert(TightnessCase::case3);
  const SourceRelayCapacity best = source_relay_capacity(m);
  if (r1 >= output_entropy_given_state(m, best.argmax_px1) - kTol) out.insert(TightnessCase::case4);
  return out;
}

}  // namespace orcd
