#include "decay/langevin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "decay/rng.hpp"

namespace decay {

// ---------------------------------------------------------------------------
// PotentialSpec

PotentialSpec PotentialSpec::cubic(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("cubic potential needs a, b > 0");
  PotentialSpec p;
  p.kind_ = Kind::Cubic;
  p.a_ = a;
  p.b_ = b;
  p.lo_ = -a / b;
  p.hi_ = 2.0 * a / b;
  return p;
}

PotentialSpec PotentialSpec::double_well(double h, double x0) {
  if (!(h > 0.0) || !(x0 > 0.0)) throw DomainError("double well needs h, x0 > 0");
  PotentialSpec p;
  p.kind_ = Kind::DoubleWell;
  p.h_ = h;
  p.x0_ = x0;
  p.lo_ = -2.0 * x0;
  p.hi_ = 2.0 * x0;
  return p;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> xs, std::vector<double> us) {
  if (xs.size() != us.size() || xs.size() < 4) {
    throw DomainError("tabulated potential needs >= 4 matching samples");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError("tabulated abscissae must increase");
  }
  PotentialSpec p;
  p.kind_ = Kind::Tabulated;
  p.lo_ = xs.front();
  p.hi_ = xs.back();
  p.xs_ = std::move(xs);
  p.us_ = std::move(us);
  // natural cubic spline second derivatives (tridiagonal sweep)
  const std::size_t n = p.xs_.size();
  p.d2_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (p.xs_[i] - p.xs_[i - 1]) / (p.xs_[i + 1] - p.xs_[i - 1]);
    const double denom = sig * p.d2_[i - 1] + 2.0;
    p.d2_[i] = (sig - 1.0) / denom;
    u[i] = (p.us_[i + 1] - p.us_[i]) / (p.xs_[i + 1] - p.xs_[i]) -
           (p.us_[i] - p.us_[i - 1]) / (p.xs_[i] - p.xs_[i - 1]);
    u[i] = (6.0 * u[i] / (p.xs_[i + 1] - p.xs_[i - 1]) - sig * u[i - 1]) / denom;
  }
  for (std::size_t k = n - 1; k-- > 1;) p.d2_[k] = p.d2_[k] * p.d2_[k + 1] + u[k];
  p.d2_.front() = p.d2_.back() = 0.0;
  return p;
}

double PotentialSpec::value(double x) const {
  switch (kind_) {
    case Kind::Cubic:
      return a_ * x * x - b_ * x * x * x;
    case Kind::DoubleWell: {
      const double t = x * x / (x0_ * x0_) - 1.0;
      return h_ * t * t;
    }
    case Kind::Tabulated: {
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t hi = std::clamp<std::size_t>(static_cast<std::size_t>(it - xs_.begin()), 1,
                                               xs_.size() - 1);
      const std::size_t lo = hi - 1;
      const double h = xs_[hi] - xs_[lo];
      const double a = (xs_[hi] - x) / h;
      const double b = (x - xs_[lo]) / h;
      return a * us_[lo] + b * us_[hi] +
             ((a * a * a - a) * d2_[lo] + (b * b * b - b) * d2_[hi]) * h * h / 6.0;
    }
  }
  return 0.0;
}

double PotentialSpec::grad(double x) const {
  switch (kind_) {
    case Kind::Cubic:
      return 2.0 * a_ * x - 3.0 * b_ * x * x;
    case Kind::DoubleWell: {
      const double t = x * x / (x0_ * x0_) - 1.0;
      return 4.0 * h_ * t * x / (x0_ * x0_);
    }
    case Kind::Tabulated: {
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t hi = std::clamp<std::size_t>(static_cast<std::size_t>(it - xs_.begin()), 1,
                                               xs_.size() - 1);
      const std::size_t lo = hi - 1;
      const double h = xs_[hi] - xs_[lo];
      const double a = (xs_[hi] - x) / h;
      const double b = (x - xs_[lo]) / h;
      return (us_[hi] - us_[lo]) / h +
             ((3.0 * b * b - 1.0) * d2_[hi] - (3.0 * a * a - 1.0) * d2_[lo]) * h / 6.0;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Integrator

namespace {

// Precomputed per-config step constants for the inner loops.
struct StepKernel {
  double half_dt;
  double inv_mass;
  double ou_decay;   // exp(-beta dt)
  double ou_sigma;   // sqrt(m eps (1 - exp(-2 beta dt)))

  StepKernel(const SimConfig& c)
      : half_dt(0.5 * c.dt), inv_mass(1.0 / c.mass) {
    const double beta = c.gamma / c.mass;
    ou_decay = std::exp(-beta * c.dt);
    ou_sigma = std::sqrt(c.mass * c.eps * (1.0 - ou_decay * ou_decay));
  }

  void advance(double& x, double& p, const PotentialSpec& u, double noise) const {
    p -= half_dt * u.grad(x);
    x += half_dt * p * inv_mass;
    p = ou_decay * p + ou_sigma * noise;
    x += half_dt * p * inv_mass;
    p -= half_dt * u.grad(x);
  }
};

void validate_config(const SimConfig& c) {
  if (!(c.mass > 0.0)) throw DomainError("SimConfig: mass must be positive");
  if (c.gamma < 0.0) throw DomainError("SimConfig: negative friction");
  if (c.eps < 0.0) throw DomainError("SimConfig: negative eps");
  if (!(c.dt > 0.0)) throw DomainError("SimConfig: dt must be positive");
  if (c.n_traj < 1) throw DomainError("SimConfig: n_traj must be >= 1");
}

}  // namespace

std::pair<double, double> step(double x, double p, const PotentialSpec& potential,
                               const SimConfig& config, double noise) {
  validate_config(config);
  StepKernel k(config);
  k.advance(x, p, potential, noise);
  if (!std::isfinite(x) || !std::isfinite(p)) {
    throw DivergenceError("step: state diverged (x=" + std::to_string(x) + ")");
  }
  return {x, p};
}

// ---------------------------------------------------------------------------
// Feature location

namespace {

// Golden-section refinement of an extremum bracketed by (a, b); minimizes
// sign * U.
double refine_extremum(const PotentialSpec& u, double a, double b, double sign) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = a, hi = b;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = sign * u.value(c), fd = sign * u.value(d);
  for (int it = 0; it < 200 && hi - lo > 1e-12 * (std::abs(hi) + 1.0); ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = sign * u.value(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = sign * u.value(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PotentialFeatures potential_features(const PotentialSpec& potential, double mass) {
  if (!(mass > 0.0)) throw DomainError("potential_features: mass must be positive");
  const double lo = potential.domain_lo();
  const double hi = potential.domain_hi();
  constexpr int kGrid = 2048;
  const double dx = (hi - lo) / kGrid;

  // interior local minima and maxima from slope sign changes
  std::vector<std::pair<double, bool>> extrema;  // (x, is_min)
  double prev_slope = potential.value(lo + dx) - potential.value(lo);
  for (int i = 1; i < kGrid; ++i) {
    const double x1 = lo + i * dx;
    const double slope = potential.value(x1 + dx) - potential.value(x1);
    if (prev_slope < 0.0 && slope > 0.0) {
      extrema.emplace_back(refine_extremum(potential, x1 - dx, x1 + dx, +1.0), true);
    } else if (prev_slope > 0.0 && slope < 0.0) {
      extrema.emplace_back(refine_extremum(potential, x1 - dx, x1 + dx, -1.0), false);
    }
    prev_slope = slope;
  }

  // first minimum followed by a maximum defines the escape barrier
  for (std::size_t i = 0; i + 1 < extrema.size(); ++i) {
    if (extrema[i].second && !extrema[i + 1].second) {
      PotentialFeatures f;
      f.x_min = extrema[i].first;
      f.x_max = extrema[i + 1].first;
      f.delta_u = potential.value(f.x_max) - potential.value(f.x_min);
      if (!(f.delta_u > 0.0)) break;
      const double h = std::max(1e-5 * (hi - lo), 1e-9);
      auto curvature = [&](double x) {
        return (potential.value(x + h) - 2.0 * potential.value(x) + potential.value(x - h)) /
               (h * h);
      };
      f.omega_min = std::sqrt(std::abs(curvature(f.x_min)) / mass);
      f.omega_max = std::sqrt(std::abs(curvature(f.x_max)) / mass);
      return f;
    }
  }
  throw TopologyError("potential_features: no well/barrier pair on the search domain");
}

// ---------------------------------------------------------------------------
// Equilibrium moments (U = 0)

EquilibriumMoments equilibrium_check(const SimConfig& config) {
  validate_config(config);
  if (!(config.gamma > 0.0)) throw DomainError("equilibrium_check: needs gamma > 0");
  StepKernel kernel(config);
  const std::uint64_t n_steps = static_cast<std::uint64_t>(config.t_max / config.dt);
  const double beta = config.gamma / config.mass;
  const std::uint64_t burn = std::min<std::uint64_t>(
      n_steps / 2, static_cast<std::uint64_t>(10.0 / (beta * config.dt)));

  double sum_ke = 0.0, sum_ke2 = 0.0, sum_x2 = 0.0;
  std::uint64_t n_ke = 0;
  for (std::uint64_t traj = 0; traj < config.n_traj; ++traj) {
    GaussianStream noise = GaussianStream::stream(config.seed, traj);
    double x = config.x_init, p = config.p_init;
    double ke_traj = 0.0;
    std::uint64_t n_traj_ke = 0;
    for (std::uint64_t i = 0; i < n_steps; ++i) {
      p = kernel.ou_decay * p + kernel.ou_sigma * noise.next();
      x += config.dt * p / config.mass;
      if (i >= burn) {
        ke_traj += p * p / (2.0 * config.mass);
        ++n_traj_ke;
      }
    }
    if (n_traj_ke > 0) {
      const double m = ke_traj / n_traj_ke;
      sum_ke += m;
      sum_ke2 += m * m;
      ++n_ke;
    }
    sum_x2 += x * x;
  }
  EquilibriumMoments out;
  out.kinetic_avg = sum_ke / n_ke;
  if (n_ke > 1) {
    const double var = (sum_ke2 - sum_ke * sum_ke / n_ke) / (n_ke - 1);
    out.kinetic_stderr = std::sqrt(std::max(var, 0.0) / n_ke);
  }
  out.msd_rate = sum_x2 / config.n_traj / (n_steps * config.dt);
  return out;
}

// ---------------------------------------------------------------------------
// Escape simulation

EscapeStats simulate_escape(const PotentialSpec& potential, const SimConfig& config) {
  validate_config(config);
  const PotentialFeatures feats = potential_features(potential, config.mass);
  if (!(config.absorb_x > feats.x_max)) {
    throw DomainError("simulate_escape: absorb_x must lie beyond the barrier top");
  }
  if (config.dt * feats.omega_max > 0.05 + 1e-12) {
    throw DomainError("simulate_escape: dt * omega_max exceeds the 0.05 resolution guard");
  }

  const std::uint64_t n = config.n_traj;
  std::vector<double> times(n, 0.0);
  std::vector<std::uint8_t> censored(n, 0);
  const std::uint64_t max_steps = static_cast<std::uint64_t>(config.t_max / config.dt);
  StepKernel kernel(config);

  // Trajectories are stepped in small interleaved batches: the integrator is
  // one long floating-point dependency chain, so independent lanes are what
  // keeps the pipeline full. Each trajectory still consumes exactly its own
  // noise stream, so results do not depend on the batching.
  auto run_with_grad = [&](auto grad, std::uint64_t begin, std::uint64_t end) {
    constexpr int kLanes = 4;
    struct Lane {
      double x = 0.0, p = 0.0;
      std::uint64_t traj = 0, step_count = 0;
      GaussianStream noise{};
      bool active = false;
    };
    std::array<Lane, kLanes> lanes;
    std::uint64_t next_traj = begin;
    int active = 0;

    auto load = [&](Lane& lane) {
      if (next_traj >= end) {
        lane.active = false;
        return;
      }
      lane.x = config.x_init;
      lane.p = config.p_init;
      lane.traj = next_traj;
      lane.step_count = 0;
      lane.noise = GaussianStream::stream(config.seed, next_traj);
      lane.active = true;
      ++next_traj;
      ++active;
    };
    auto finish = [&](Lane& lane, bool escaped) {
      if (!(std::isfinite(lane.x) && std::isfinite(lane.p))) {
        throw DivergenceError("simulate_escape: trajectory " + std::to_string(lane.traj) +
                              " diverged at step " + std::to_string(lane.step_count));
      }
      if (escaped) {
        times[lane.traj] = static_cast<double>(lane.step_count) * config.dt;
      } else {
        times[lane.traj] = static_cast<double>(max_steps) * config.dt;
        censored[lane.traj] = 1;
      }
      --active;
      load(lane);
    };

    for (auto& lane : lanes) load(lane);
    while (active > 0) {
      for (auto& lane : lanes) {
        if (!lane.active) continue;
        double x = lane.x, p = lane.p;
        p -= kernel.half_dt * grad(x);
        x += kernel.half_dt * p * kernel.inv_mass;
        p = kernel.ou_decay * p + kernel.ou_sigma * lane.noise.next();
        x += kernel.half_dt * p * kernel.inv_mass;
        p -= kernel.half_dt * grad(x);
        lane.x = x;
        lane.p = p;
        ++lane.step_count;
        if (x >= config.absorb_x) {
          finish(lane, true);
        } else if (lane.step_count >= max_steps) {
          finish(lane, false);
        }
      }
    }
  };

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    switch (potential.kind()) {
      case PotentialSpec::Kind::Cubic: {
        const auto [a, b] = potential.cubic_coefficients();
        run_with_grad([a = a, b = b](double x) { return 2.0 * a * x - 3.0 * b * x * x; },
                      begin, end);
        break;
      }
      case PotentialSpec::Kind::DoubleWell: {
        const auto [h, x0] = potential.double_well_coefficients();
        const double inv_x02 = 1.0 / (x0 * x0);
        run_with_grad(
            [h = h, inv_x02](double x) {
              return 4.0 * h * (x * x * inv_x02 - 1.0) * x * inv_x02;
            },
            begin, end);
        break;
      }
      case PotentialSpec::Kind::Tabulated:
        run_with_grad([&potential](double x) { return potential.grad(x); }, begin, end);
        break;
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  unsigned n_threads = config.n_threads > 0 ? static_cast<unsigned>(config.n_threads)
                                            : (hw > 0 ? hw : 1);
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n));
  if (n_threads <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    const std::uint64_t chunk = (n + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const std::uint64_t b = t * chunk;
      const std::uint64_t e = std::min<std::uint64_t>(b + chunk, n);
      if (b >= e) break;
      pool.emplace_back([&, b, e] {
        try {
          run_range(b, e);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  EscapeStats out;
  out.escape_times = times;
  out.censored.assign(censored.begin(), censored.end());
  double total_time = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    total_time += times[k];
    if (censored[k]) {
      ++out.n_censored;
    } else {
      ++out.n_escaped;
    }
  }
  if (out.n_escaped == 0) {
    // lower bound only: every trajectory was still bound at the horizon
    out.all_censored = true;
    out.mfpt = total_time;
    out.mfpt_stderr = std::numeric_limits<double>::infinity();
    out.rate = 1.0 / total_time;
    return out;
  }
  // censoring-corrected exponential MLE: total observed time over escapes
  out.mfpt = total_time / static_cast<double>(out.n_escaped);
  out.mfpt_stderr = out.mfpt / std::sqrt(static_cast<double>(out.n_escaped));
  out.rate = 1.0 / out.mfpt;
  return out;
}

}  // namespace decay
