#include "orcd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "json.hpp"
#include "orcd/errors.hpp"
#include "orcd/info.hpp"
#include "solver_internal.hpp"

namespace orcd {

TestChannel::TestChannel(std::size_t card_u, std::size_t card_yr, std::size_t card_yhat,
                         std::vector<double> table)
    : card_u_(card_u), card_yr_(card_yr), card_yhat_(card_yhat), table_(std::move(table)) {
  if (card_u_ == 0 || card_yr_ == 0 || card_yhat_ == 0) throw ValidationError("test channel with empty alphabet");
  if (table_.size() != card_u_ * card_yr_ * card_yhat_) throw ValidationError("test channel size mismatch");
  for (std::size_t row = 0; row < card_u_ * card_yr_; ++row) {
    auto first = table_.begin() + static_cast<std::ptrdiff_t>(row * card_yhat_);
    const Pmf checked(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(card_yhat_)));
    std::copy(checked.probs().begin(), checked.probs().end(), first);
  }
}

std::size_t max_card_u(const DiscreteOrcd& m) { return m.alphabets().x1 + 3; }

std::size_t max_card_yhat(const DiscreteOrcd& m, std::size_t card_u) { return card_u * m.alphabets().yr + 1; }

void check_scheme(const DiscreteOrcd& m, const AuxiliaryScheme& s) {
  const Alphabets a = m.alphabets();
  if (s.joint_ux1.rank() != 2 || s.joint_ux1.dims()[1] != a.x1) {
    throw UsageError("joint_ux1 must have axes [U, X1] with |X1| = " + std::to_string(a.x1));
  }
  const std::size_t cu = s.card_u();
  if (cu > max_card_u(m)) {
    throw UsageError("|U| = " + std::to_string(cu) + " exceeds |X1| + 3 = " + std::to_string(max_card_u(m)));
  }
  if (s.test_channel.card_u() != cu || s.test_channel.card_yr() != a.yr) {
    throw UsageError("test channel shape does not match |U| x |Y_R|");
  }
  if (s.card_yhat() > max_card_yhat(m, cu)) {
    throw UsageError("|Yhat| = " + std::to_string(s.card_yhat()) + " exceeds |U||Y_R| + 1 = " +
                     std::to_string(max_card_yhat(m, cu)));
  }
}

JointPmf assemble_joint(const DiscreteOrcd& m, const AuxiliaryScheme& s) {
  check_scheme(m, s);
  const Alphabets a = m.alphabets();
  const std::size_t nu = s.card_u(), nh = s.card_yhat();
  std::vector<double> table;
  table.reserve(nu * a.x1 * a.z * a.yr * nh);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t x = 0; x < a.x1; ++x) {
      const std::size_t ux[2] = {u, x};
      const double pux = s.joint_ux1.at(ux);
      for (std::size_t z = 0; z < a.z; ++z)
        for (std::size_t y = 0; y < a.yr; ++y)
          for (std::size_t h = 0; h < nh; ++h)
            table.push_back(pux * m.p_z()[z] * m.chan_sr()(x, z, y) * s.test_channel(u, y, h));
    }
  return JointPmf({nu, a.x1, a.z, a.yr, nh}, std::move(table), {"U", "X1", "Z", "YR", "YH"});
}

ObjectiveValue objective(const DiscreteOrcd& m, const AuxiliaryScheme& s, double r2) {
  const JointPmf j = assemble_joint(m, s);
  constexpr std::size_t U = 0, X1 = 1, Z = 2, YR = 3, YH = 4;
  ObjectiveValue v;
  v.i_u_yr = mutual_information(j, {U}, {YR});
  v.i_x1_yhat = conditional_mutual_information(j, {X1}, {YH}, {U, Z});
  v.i_yr_yhat = conditional_mutual_information(j, {YR}, {YH}, {U, Z});
  v.rate = r2 + v.i_u_yr + v.i_x1_yhat;
  v.constraint_lhs = v.i_u_yr + v.i_yr_yhat;
  return v;
}

ObjectiveValue objective(const DiscreteOrcd& m, const AuxiliaryScheme& s) {
  return objective(m, s, link_capacities(m).r2);
}

double cutset_discrete(const DiscreteOrcd& m) {
  const LinkCapacities links = link_capacities(m);
  return links.r2 + std::min(links.r1, source_relay_capacity(m).value);
}

namespace detail {

Problem make_problem(const DiscreteOrcd& m, std::size_t card_u, std::size_t card_yhat, double r1, double r2) {
  const Alphabets a = m.alphabets();
  Problem p;
  p.nu = card_u;
  p.nx = a.x1;
  p.nz = a.z;
  p.ny = a.yr;
  p.nh = card_yhat;
  p.pz.assign(m.p_z().probs().begin(), m.p_z().probs().end());
  p.w.assign(m.chan_sr().table().begin(), m.chan_sr().table().end());
  p.r1 = r1;
  p.r2 = r2;
  return p;
}

Evaluator::Evaluator(const Problem& p)
    : p_(p),
      terms_(p.nu),
      puzy_(p.nu * p.nz * p.ny),
      puy_(p.nu * p.ny),
      pu_(p.nu),
      py_(p.ny),
      acc_(p.nh) {}

namespace {
inline double plogp_ratio(double num, double den) { return num > 0.0 ? num * std::log2(num / den) : 0.0; }
}  // namespace

Evaluator::Terms Evaluator::terms_for(const State& s, std::size_t u) {
  const std::size_t nx = p_.nx, nz = p_.nz, ny = p_.ny, nh = p_.nh;
  Terms t;

  // H(Yhat | U, Y_R): Yhat depends on (U, Y_R) only.
  for (std::size_t y = 0; y < ny; ++y) {
    const double w = puy_[u * ny + y];
    if (w == 0.0) continue;
    const double* col = &s.tc[(u * ny + y) * nh];
    double h = 0.0;
    for (std::size_t k = 0; k < nh; ++k)
      if (col[k] > 0.0) h -= col[k] * std::log2(col[k]);
    t.h_given_uy += w * h;
  }

  for (std::size_t z = 0; z < nz; ++z) {
    const double puz = pu_[u] * p_.pz[z];
    if (puz == 0.0) continue;
    std::fill(acc_.begin(), acc_.end(), 0.0);
    const double* py_uz = &puzy_[(u * nz + z) * ny];
    for (std::size_t y = 0; y < ny; ++y) {
      if (py_uz[y] == 0.0) continue;
      const double* col = &s.tc[(u * ny + y) * nh];
      for (std::size_t k = 0; k < nh; ++k) acc_[k] += py_uz[y] * col[k];
    }
    for (std::size_t k = 0; k < nh; ++k) t.h_given_uz -= plogp_ratio(acc_[k], puz);

    for (std::size_t x = 0; x < nx; ++x) {
      const double puxz = s.joint[u * nx + x] * p_.pz[z];
      if (puxz == 0.0) continue;
      std::fill(acc_.begin(), acc_.end(), 0.0);
      const double* wrow = &p_.w[(x * nz + z) * ny];
      for (std::size_t y = 0; y < ny; ++y) {
        if (wrow[y] == 0.0) continue;
        const double* col = &s.tc[(u * ny + y) * nh];
        for (std::size_t k = 0; k < nh; ++k) acc_[k] += wrow[y] * col[k];
      }
      for (std::size_t k = 0; k < nh; ++k)
        if (acc_[k] > 0.0) t.h_given_uxz -= puxz * acc_[k] * std::log2(acc_[k]);
    }
  }
  return t;
}

ObjectiveValue Evaluator::combine(double i_uy, const Terms& sum) const {
  ObjectiveValue v;
  v.i_u_yr = std::max(i_uy, 0.0);
  v.i_x1_yhat = std::max(sum.h_given_uz - sum.h_given_uxz, 0.0);
  v.i_yr_yhat = std::max(sum.h_given_uz - sum.h_given_uy, 0.0);
  v.rate = p_.r2 + v.i_u_yr + v.i_x1_yhat;
  v.constraint_lhs = v.i_u_yr + v.i_yr_yhat;
  return v;
}

ObjectiveValue Evaluator::operator()(const State& s) {
  const std::size_t nu = p_.nu, nx = p_.nx, nz = p_.nz, ny = p_.ny;
  std::fill(puzy_.begin(), puzy_.end(), 0.0);
  std::fill(puy_.begin(), puy_.end(), 0.0);
  std::fill(py_.begin(), py_.end(), 0.0);
  for (std::size_t u = 0; u < nu; ++u) {
    double mass = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      const double pux = s.joint[u * nx + x];
      mass += pux;
      if (pux == 0.0) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        const double pxz = pux * p_.pz[z];
        const double* wrow = &p_.w[(x * nz + z) * ny];
        double* dst = &puzy_[(u * nz + z) * ny];
        for (std::size_t y = 0; y < ny; ++y) dst[y] += pxz * wrow[y];
      }
    }
    pu_[u] = mass;
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t y = 0; y < ny; ++y) puy_[u * ny + y] += puzy_[(u * nz + z) * ny + y];
    for (std::size_t y = 0; y < ny; ++y) py_[y] += puy_[u * ny + y];
  }

  i_uy_ = 0.0;
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t y = 0; y < ny; ++y) i_uy_ += plogp_ratio(puy_[u * ny + y], pu_[u] * py_[y]);

  Terms sum;
  for (std::size_t u = 0; u < nu; ++u) {
    terms_[u] = terms_for(s, u);
    sum.h_given_uy += terms_[u].h_given_uy;
    sum.h_given_uz += terms_[u].h_given_uz;
    sum.h_given_uxz += terms_[u].h_given_uxz;
  }
  return combine(i_uy_, sum);
}

ObjectiveValue Evaluator::with_changed_u(const State& s, std::size_t changed) {
  Terms sum;
  for (std::size_t u = 0; u < p_.nu; ++u) {
    const Terms t = u == changed ? terms_for(s, u) : terms_[u];
    sum.h_given_uy += t.h_given_uy;
    sum.h_given_uz += t.h_given_uz;
    sum.h_given_uxz += t.h_given_uxz;
  }
  return combine(i_uy_, sum);
}

AuxiliaryScheme to_scheme(const Problem& p, const State& s) {
  return AuxiliaryScheme{JointPmf({p.nu, p.nx}, s.joint, {"U", "X1"}), TestChannel(p.nu, p.ny, p.nh, s.tc)};
}

State from_scheme(const AuxiliaryScheme& s) {
  return State{std::vector<double>(s.joint_ux1.table().begin(), s.joint_ux1.table().end()),
               std::vector<double>(s.test_channel.table().begin(), s.test_channel.table().end())};
}

}  // namespace detail

namespace {

using detail::Evaluator;
using detail::Problem;
using detail::State;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInvPhi = 0.6180339887498949;

class AscentRun {
 public:
  AscentRun(const Problem& p, const SolverConfig& cfg, std::size_t restart)
      : p_(p), cfg_(cfg), eval_(p) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    rng_.seed(seq);
    state_ = initial_state(restart);
    current_ = score(state_);
  }

  void run() {
    const std::size_t blocks = 1 + p_.nu * p_.ny;
    std::size_t idle = 0;
    for (std::size_t it = 0; it < cfg_.max_iters && idle < cfg_.stall_iters; ++it) {
      const std::size_t b = it % blocks;
      const double before = current_;
      if (b == 0) {
        line_step(state_.joint.data(), state_.joint.size(), kWholeState);
      } else {
        line_step(state_.tc.data() + (b - 1) * p_.nh, p_.nh, (b - 1) / p_.ny);
      }
      idle = current_ > before + 1e-12 ? 0 : idle + 1;
    }
  }

  double rate() const { return current_; }
  const State& state() const { return state_; }

 private:
  double feasible_rate(const ObjectiveValue& v) const {
    return v.constraint_lhs <= p_.r1 + detail::kFeasibilityNoise ? v.rate : kNegInf;
  }

  double score(const State& s) { return feasible_rate(eval_(s)); }

  // Always-feasible companion of `s`: U independent of X1, Yhat independent
  // of everything. Both constraint terms vanish.
  State product_of(const State& s) const {
    State b;
    b.joint.assign(s.joint.size(), 0.0);
    std::vector<double> pu(p_.nu, 0.0), px(p_.nx, 0.0);
    for (std::size_t u = 0; u < p_.nu; ++u)
      for (std::size_t x = 0; x < p_.nx; ++x) {
        pu[u] += s.joint[u * p_.nx + x];
        px[x] += s.joint[u * p_.nx + x];
      }
    for (std::size_t u = 0; u < p_.nu; ++u)
      for (std::size_t x = 0; x < p_.nx; ++x) b.joint[u * p_.nx + x] = pu[u] * px[x];
    b.tc.assign(s.tc.size(), 1.0 / static_cast<double>(p_.nh));
    return b;
  }

  static State mix(const State& a, const State& b, double lambda) {
    State out = a;
    for (std::size_t i = 0; i < out.joint.size(); ++i) out.joint[i] = (1 - lambda) * a.joint[i] + lambda * b.joint[i];
    for (std::size_t i = 0; i < out.tc.size(); ++i) out.tc[i] = (1 - lambda) * a.tc[i] + lambda * b.tc[i];
    return out;
  }

  std::vector<double> dirichlet(std::size_t n, double concentration) {
    std::gamma_distribution<double> gamma(concentration, 1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) sum += (x = gamma(rng_));
    if (sum <= 0.0) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    for (double& x : v) x /= sum;
    return v;
  }

  State initial_state(std::size_t restart) {
    State cand;
    cand.joint.assign(p_.nu * p_.nx, 0.0);
    cand.tc.assign(p_.nu * p_.ny * p_.nh, 0.0);
    if (restart == 0) {
      // Compress-only start: U constant, Yhat a copy of Y_R.
      for (std::size_t x = 0; x < p_.nx; ++x) cand.joint[x] = 1.0 / static_cast<double>(p_.nx);
      for (std::size_t u = 0; u < p_.nu; ++u)
        for (std::size_t y = 0; y < p_.ny; ++y) cand.tc[(u * p_.ny + y) * p_.nh + y % p_.nh] = 1.0;
    } else if (restart == 1) {
      // Decode-only start: U = X1 (folded), Yhat constant.
      for (std::size_t x = 0; x < p_.nx; ++x) cand.joint[(x % p_.nu) * p_.nx + x] = 1.0 / static_cast<double>(p_.nx);
      std::fill(cand.tc.begin(), cand.tc.end(), 1.0 / static_cast<double>(p_.nh));
    } else {
      cand.joint = dirichlet(p_.nu * p_.nx, 1.0);
      for (std::size_t c = 0; c < p_.nu * p_.ny; ++c) {
        const std::vector<double> col = dirichlet(p_.nh, 0.5);
        std::copy(col.begin(), col.end(), cand.tc.begin() + static_cast<std::ptrdiff_t>(c * p_.nh));
      }
    }
    if (score(cand) > kNegInf) return cand;

    const State base = product_of(cand);
    if (score(base) == kNegInf) throw SolverError("no feasible starting point (negative relay rate?)");
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 40; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (score(mix(base, cand, mid)) > kNegInf) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return mix(base, cand, lo);
  }

  static constexpr std::size_t kWholeState = static_cast<std::size_t>(-1);

  // One line search inside the simplex block x[0..n). Keeps the move only if
  // it strictly improves the feasible rate. `only_u` names the U symbol whose
  // test-channel columns contain the block, or kWholeState for p(u,x1).
  void line_step(double* x, std::size_t n, std::size_t only_u) {
    if (n < 2) return;
    std::vector<double> x0(x, x + n);
    std::vector<double> d(n, 0.0);
    if (std::bernoulli_distribution(0.5)(rng_)) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t i = pick(rng_);
      std::size_t j = pick(rng_);
      while (j == i) j = pick(rng_);
      d[i] = 1.0;
      d[j] = -1.0;
    } else {
      std::normal_distribution<double> normal;
      double mean = 0.0;
      for (double& v : d) mean += (v = normal(rng_));
      mean /= static_cast<double>(n);
      for (double& v : d) v -= mean;
    }

    double t_lo = kNegInf, t_hi = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (d[k] > 0.0) t_lo = std::max(t_lo, -x0[k] / d[k]);
      if (d[k] < 0.0) t_hi = std::min(t_hi, -x0[k] / d[k]);
    }
    if (!(t_hi - t_lo > 1e-15)) return;

    auto place = [&](double t) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += (x[k] = std::max(0.0, x0[k] + t * d[k]));
      for (std::size_t k = 0; k < n; ++k) x[k] /= sum;
    };
    auto phi = [&](double t) {
      place(t);
      return only_u == kWholeState ? score(state_) : feasible_rate(eval_.with_changed_u(state_, only_u));
    };

    double best_t = 0.0;
    double best = current_;
    const std::size_t g = std::max<std::size_t>(cfg_.grid_steps, 2);
    const double span = (t_hi - t_lo) / static_cast<double>(g);
    std::size_t center = 0;
    bool from_grid = false;
    for (std::size_t k = 0; k <= g; ++k) {
      const double t = k == g ? t_hi : t_lo + span * static_cast<double>(k);
      const double v = phi(t);
      if (v > best) {
        best = v;
        best_t = t;
        center = k;
        from_grid = true;
      }
    }
    if (!from_grid) {
      center = static_cast<std::size_t>(std::clamp((0.0 - t_lo) / span, 0.0, static_cast<double>(g)));
    }

    // Golden-section refinement on the bracket around the best scan point.
    double a = t_lo + span * static_cast<double>(center > 0 ? center - 1 : 0);
    double b = std::min(t_hi, t_lo + span * static_cast<double>(std::min(center + 1, g)));
    double c = b - kInvPhi * (b - a);
    double e = a + kInvPhi * (b - a);
    double fc = phi(c);
    double fe = phi(e);
    for (int it = 0; it < 40; ++it) {
      if (fc >= fe) {
        if (fc > best) best = fc, best_t = c;
        b = e;
        e = c;
        fe = fc;
        c = b - kInvPhi * (b - a);
        fc = phi(c);
      } else {
        if (fe > best) best = fe, best_t = e;
        a = c;
        c = e;
        fc = fe;
        e = a + kInvPhi * (b - a);
        fe = phi(e);
      }
    }
    if (fc > best) best = fc, best_t = c;
    if (fe > best) best = fe, best_t = e;

    if (best > current_) {
      place(best_t);
      const double confirmed = score(state_);
      if (confirmed > current_) {
        current_ = confirmed;
        return;
      }
    }
    std::copy(x0.begin(), x0.end(), x);
    if (only_u == kWholeState) score(state_);  // resync the evaluator cache
  }

  const Problem& p_;
  const SolverConfig& cfg_;
  Evaluator eval_;
  std::mt19937_64 rng_;
  State state_;
  double current_ = kNegInf;
};

}  // namespace

SolveReport solve_capacity(const DiscreteOrcd& m, const SolverConfig& cfg) {
  const Alphabets a = m.alphabets();
  if (a.x1 * a.yr * a.z > cfg.product_cap) {
    throw UsageError("|X1||Y_R||Z| = " + std::to_string(a.x1 * a.yr * a.z) + " exceeds the size cap " +
                     std::to_string(cfg.product_cap));
  }
  if (cfg.restarts == 0) throw UsageError("at least one restart is required");
  const std::size_t card_u = cfg.card_u == 0 ? max_card_u(m) : cfg.card_u;
  if (card_u > max_card_u(m)) throw UsageError("|U| exceeds |X1| + 3");
  const std::size_t card_yhat = cfg.card_yhat == 0 ? max_card_yhat(m, card_u) : cfg.card_yhat;
  if (card_yhat > max_card_yhat(m, card_u)) throw UsageError("|Yhat| exceeds |U||Y_R| + 1");

  const LinkCapacities links = link_capacities(m);
  if (links.r1 < 0.0) throw SolverError("no feasible point: negative relay rate");
  const Problem problem = detail::make_problem(m, card_u, card_yhat, links.r1, links.r2);

  struct Outcome {
    double rate = kNegInf;
    State state;
  };
  std::vector<Outcome> outcomes(cfg.restarts);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.restarts && !failed; r = next++) {
      try {
        AscentRun run(problem, cfg, r);
        run.run();
        outcomes[r] = {run.rate(), run.state()};
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = std::min(threads, cfg.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Highest rate wins; ties go to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].rate > outcomes[best].rate) best = r;
  }
  if (outcomes[best].rate == kNegInf) throw SolverError("no feasible point found");

  AuxiliaryScheme scheme = detail::to_scheme(problem, outcomes[best].state);
  const ObjectiveValue v = objective(m, scheme, links.r2);
  SolveReport report{v.rate, std::move(scheme), false, links.r1 - v.constraint_lhs, cfg.restarts, cfg.seed,
                     links.r1, links.r2};
  report.feasible = report.constraint_slack >= -1e-9;
  return report;
}

std::string solve_report_to_json(const SolveReport& r, int indent) {
  using json = nlohmann::ordered_json;
  const AuxiliaryScheme& s = r.best_scheme;
  const std::size_t nx = s.joint_ux1.dims()[1];
  json joint = json::array();
  for (std::size_t u = 0; u < s.card_u(); ++u) {
    json row = json::array();
    for (std::size_t x = 0; x < nx; ++x) row.push_back(s.joint_ux1.table()[u * nx + x]);
    joint.push_back(std::move(row));
  }
  json tc = json::array();
  for (std::size_t u = 0; u < s.card_u(); ++u) {
    json per_y = json::array();
    for (std::size_t y = 0; y < s.test_channel.card_yr(); ++y) {
      json col = json::array();
      for (std::size_t h = 0; h < s.card_yhat(); ++h) col.push_back(s.test_channel(u, y, h));
      per_y.push_back(std::move(col));
    }
    tc.push_back(std::move(per_y));
  }
  json doc = {{"best_rate", r.best_rate},
              {"feasible", r.feasible},
              {"constraint_slack", r.constraint_slack},
              {"restarts_used", r.restarts_used},
              {"seed", r.seed},
              {"r1", r.r1},
              {"r2", r.r2},
              {"best_scheme",
               {{"card_u", s.card_u()}, {"card_yhat", s.card_yhat()}, {"joint_ux1", joint}, {"test_channel", tc}}}};
  return doc.dump(indent);
}

}  // namespace orcd
