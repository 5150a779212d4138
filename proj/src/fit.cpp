#include "decay/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace decay {

namespace {

constexpr int kP = 20;
constexpr double kLog10e = 0.43429448190325182765;
constexpr double kLambdaMax = 1e14;
constexpr double kLambdaMin = 1e-14;

using Mat = std::vector<double>;  // row-major

std::vector<std::size_t> fit_indices(const Dataset& ds) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    if (ds.records[i].role == Role::Fit) idx.push_back(i);
  }
  return idx;
}

std::vector<double> make_weights(const Dataset& ds, const std::vector<std::size_t>& idx,
                                 const Weighting& weighting) {
  std::vector<double> w(idx.size(), 1.0);
  switch (weighting.kind) {
    case WeightingKind::Unit:
      break;
    case WeightingKind::ExperimentalLogSigma:
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& r = ds.records[idx[k]];
        const double dt = 0.5 * (r.t_half_err_lo + r.t_half_err_hi);
        if (!(dt > 0.0) || !(r.t_half_exp > 0.0)) {
          throw DomainError("weighting: record " + std::to_string(idx[k] + 1) +
                            " has no usable experimental error");
        }
        w[k] = 1.0 / (kLog10e * dt / r.t_half_exp);
      }
      break;
    case WeightingKind::Custom:
      if (weighting.custom.size() != idx.size()) {
        throw DomainError("weighting: expected " + std::to_string(idx.size()) +
                          " custom weights, got " + std::to_string(weighting.custom.size()));
      }
      w = weighting.custom;
      break;
  }
  return w;
}

// Cholesky in place (lower triangle); false if the matrix is not positive
// definite to working precision.
bool cholesky(std::array<double, kP * kP>& m) {
  for (int j = 0; j < kP; ++j) {
    double d = m[j * kP + j];
    for (int k = 0; k < j; ++k) d -= m[j * kP + k] * m[j * kP + k];
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    m[j * kP + j] = ljj;
    for (int i = j + 1; i < kP; ++i) {
      double s = m[i * kP + j];
      for (int k = 0; k < j; ++k) s -= m[i * kP + k] * m[j * kP + k];
      m[i * kP + j] = s / ljj;
    }
  }
  return true;
}

void cholesky_solve(const std::array<double, kP * kP>& l, std::array<double, kP>& x) {
  for (int i = 0; i < kP; ++i) {
    double s = x[i];
    for (int k = 0; k < i; ++k) s -= l[i * kP + k] * x[k];
    x[i] = s / l[i * kP + i];
  }
  for (int i = kP - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k < kP; ++k) s -= l[k * kP + i] * x[k];
    x[i] = s / l[i * kP + i];
  }
}

// Classic cyclic Jacobi eigendecomposition for the rank-deficiency report.
void jacobi_eigen(std::array<double, kP * kP> a, std::array<double, kP>& eigval,
                  std::array<double, kP * kP>& eigvec) {
  eigvec.fill(0.0);
  for (int i = 0; i < kP; ++i) eigvec[i * kP + i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < kP; ++i)
      for (int j = i + 1; j < kP; ++j) off += a[i * kP + j] * a[i * kP + j];
    if (off < 1e-24) break;
    for (int p = 0; p < kP; ++p) {
      for (int q = p + 1; q < kP; ++q) {
        const double apq = a[p * kP + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * kP + q] - a[p * kP + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < kP; ++k) {
          const double akp = a[k * kP + p], akq = a[k * kP + q];
          a[k * kP + p] = c * akp - s * akq;
          a[k * kP + q] = s * akp + c * akq;
        }
        for (int k = 0; k < kP; ++k) {
          const double apk = a[p * kP + k], aqk = a[q * kP + k];
          a[p * kP + k] = c * apk - s * aqk;
          a[q * kP + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < kP; ++k) {
          const double vkp = eigvec[k * kP + p], vkq = eigvec[k * kP + q];
          eigvec[k * kP + p] = c * vkp - s * vkq;
          eigvec[k * kP + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (int i = 0; i < kP; ++i) eigval[i] = a[i * kP + i];
}

std::array<double, kP * kP> normal_matrix(const Mat& jac, std::size_t n) {
  std::array<double, kP * kP> h{};
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = jac.data() + r * kP;
    for (int i = 0; i < kP; ++i) {
      for (int j = i; j < kP; ++j) h[i * kP + j] += row[i] * row[j];
    }
  }
  for (int i = 0; i < kP; ++i) {
    for (int j = 0; j < i; ++j) h[i * kP + j] = h[j * kP + i];
  }
  return h;
}

std::optional<std::vector<double>> try_residuals(const Dataset& ds, const ParameterSet& params,
                                                 const std::vector<std::size_t>& idx,
                                                 const std::vector<double>& w,
                                                 const ModelOptions& options) {
  std::vector<double> res(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& rec = ds.records[idx[k]];
    try {
      const KramersBreakdown b = log_half_life(rec, params, options.constants, options.variant);
      res[k] = w[k] * (b.lg_t_half - std::log10(rec.t_half_exp));
    } catch (const DegenerateParameterization&) {
      return std::nullopt;
    }
    if (!std::isfinite(res[k])) return std::nullopt;
  }
  return res;
}

double sum_sq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

std::array<double, kP> ref_vector(const FitConfig& cfg) {
  std::array<double, kP> ref{};
  if (cfg.a_ref) ref = cfg.a_ref->a;
  return ref;
}

}  // namespace

void FitConfig::validate() const {
  if (!(damping_init > 0.0)) throw DomainError("FitConfig: damping_init must be positive");
  if (!(damping_grow > 1.0) || !(damping_shrink > 0.0) || !(damping_shrink < 1.0)) {
    throw DomainError("FitConfig: need damping_grow > 1 > damping_shrink > 0");
  }
  if (max_iter < 1) throw DomainError("FitConfig: max_iter must be >= 1");
  if (!(fd_step > 1e-10) || !(fd_step < 1e-2)) {
    throw DomainError("FitConfig: fd_step outside (1e-10, 1e-2)");
  }
  if (regularization < 0.0) throw DomainError("FitConfig: negative regularization");
  model.constants.validate();
}

std::vector<double> residuals(const Dataset& ds, const ParameterSet& params,
                              const Weighting& weighting, const ModelOptions& options) {
  const auto idx = fit_indices(ds);
  if (idx.empty()) throw DomainError("residuals: dataset has no fit records");
  const auto w = make_weights(ds, idx, weighting);
  std::vector<double> res(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& rec = ds.records[idx[k]];
    try {
      const KramersBreakdown b = log_half_life(rec, params, options.constants, options.variant);
      res[k] = w[k] * (b.lg_t_half - std::log10(rec.t_half_exp));
    } catch (const DegenerateParameterization& e) {
      throw DegenerateParameterization(std::string(e.what()) + " (fit record " +
                                       std::to_string(idx[k] + 1) + ")");
    }
  }
  return res;
}

std::vector<double> jacobian(const Dataset& ds, const ParameterSet& params, double fd_step,
                             const Weighting& weighting, bool central,
                             const ModelOptions& options) {
  if (!(fd_step > 1e-10) || !(fd_step < 1e-2)) {
    throw DomainError("jacobian: fd_step outside (1e-10, 1e-2)");
  }
  const auto idx = fit_indices(ds);
  if (idx.empty()) throw DomainError("jacobian: dataset has no fit records");
  const auto w = make_weights(ds, idx, weighting);
  const std::size_t n = idx.size();

  std::vector<double> base;
  if (!central) {
    base = residuals(ds, params, weighting, options);
  }
  Mat jac(n * kP, 0.0);
  for (int j = 0; j < kP; ++j) {
    const double h = std::max(fd_step * std::abs(params.a[j]), 1e-8);
    ParameterSet up = params;
    up.a[j] += h;
    try {
      if (central) {
        ParameterSet dn = params;
        dn.a[j] -= h;
        const auto rp = residuals(ds, up, weighting, options);
        const auto rm = residuals(ds, dn, weighting, options);
        for (std::size_t r = 0; r < n; ++r) jac[r * kP + j] = (rp[r] - rm[r]) / (2.0 * h);
      } else {
        const auto rp = residuals(ds, up, weighting, options);
        for (std::size_t r = 0; r < n; ++r) jac[r * kP + j] = (rp[r] - base[r]) / h;
      }
    } catch (const DegenerateParameterization& e) {
      throw DegenerateParameterization(std::string(e.what()) + " (while perturbing a_" +
                                       std::to_string(j + 1) + ")");
    }
  }
  return jac;
}

FitResult fit(const Dataset& ds, const ParameterSet& init, const FitConfig& config) {
  config.validate();
  const auto idx = fit_indices(ds);
  if (idx.size() < static_cast<std::size_t>(kP + 1)) {
    throw DomainError("fit: need more than 20 fit records, have " + std::to_string(idx.size()));
  }
  const auto w = make_weights(ds, idx, config.weighting);
  const std::size_t n = idx.size();
  const auto ref = ref_vector(config);
  const double reg = config.regularization;

  auto objective = [&](const ParameterSet& p,
                       const std::vector<double>& res) -> double {
    double o = sum_sq(res);
    for (int j = 0; j < kP; ++j) {
      const double d = p.a[j] - ref[j];
      o += reg * d * d;
    }
    return o;
  };

  ParameterSet a = init;
  auto res_opt = try_residuals(ds, a, idx, w, config.model);
  if (!res_opt) {
    throw Error("fit: objective is not finite at the initial parameters");
  }
  std::vector<double> res = *res_opt;
  double obj = objective(a, res);

  FitResult out;
  double lambda = config.damping_init;
  out.iterations.push_back({obj, lambda});
  bool converged = false;

  for (int it = 0; it < config.max_iter && !converged; ++it) {
    const Mat jac = jacobian(ds, a, config.fd_step, config.weighting, false, config.model);
    std::array<double, kP> grad{};
    for (std::size_t r = 0; r < n; ++r) {
      const double* row = jac.data() + r * kP;
      for (int j = 0; j < kP; ++j) grad[j] += row[j] * res[r];
    }
    for (int j = 0; j < kP; ++j) grad[j] += reg * (a.a[j] - ref[j]);
    auto h0 = normal_matrix(jac, n);
    for (int j = 0; j < kP; ++j) h0[j * kP + j] += reg;

    bool accepted = false;
    while (!accepted) {
      auto h = h0;
      for (int j = 0; j < kP; ++j) {
        h[j * kP + j] += lambda * std::max(h0[j * kP + j], 1e-12);
      }
      std::array<double, kP> delta{};
      for (int j = 0; j < kP; ++j) delta[j] = -grad[j];
      if (cholesky(h)) {
        cholesky_solve(h, delta);
        ParameterSet trial = a;
        for (int j = 0; j < kP; ++j) trial.a[j] += delta[j];
        if (auto trial_res = try_residuals(ds, trial, idx, w, config.model)) {
          const double trial_obj = objective(trial, *trial_res);
          if (trial_obj < obj) {
            double step_sq = 0.0, a_sq = 0.0;
            for (int j = 0; j < kP; ++j) {
              step_sq += delta[j] * delta[j];
              a_sq += a.a[j] * a.a[j];
            }
            a = trial;
            res = std::move(*trial_res);
            obj = trial_obj;
            lambda = std::max(lambda * config.damping_shrink, kLambdaMin);
            out.iterations.push_back({obj, lambda});
            accepted = true;
            if (std::sqrt(step_sq) <= config.step_tol * (std::sqrt(a_sq) + 1e-30)) {
              converged = true;
            }
            break;
          }
        }
      }
      lambda *= config.damping_grow;
      if (lambda > kLambdaMax) break;  // stalled
    }
    if (!accepted) break;
  }

  out.params = a;
  out.residuals = res;
  out.chi2 = sum_sq(res);
  out.ndf = static_cast<int>(n) - kP;
  out.rms_lg = std::sqrt(out.chi2 / static_cast<double>(n));
  out.converged = converged;
  out.jacobian = jacobian(ds, a, config.fd_step, config.weighting, false, config.model);

  // Covariance diagonal; left as NaN when the normal matrix is singular.
  // The returned parameters carry their own covariance-derived relative
  // errors, not whatever the start point had.
  out.covariance_diag.fill(std::numeric_limits<double>::quiet_NaN());
  out.params.rel_err.fill(0.0);
  auto h = normal_matrix(out.jacobian, n);
  auto l = h;
  if (out.ndf > 0 && cholesky(l)) {
    const double s2 = out.chi2 / out.ndf;
    for (int j = 0; j < kP; ++j) {
      std::array<double, kP> e{};
      e[j] = 1.0;
      cholesky_solve(l, e);
      out.covariance_diag[j] = s2 * e[j];
      out.params.rel_err[j] = std::sqrt(out.covariance_diag[j]) / std::abs(out.params.a[j]);
    }
  }
  return out;
}

std::pair<double, int> chi_square(const Dataset& ds, const ParameterSet& params,
                                  const Weighting& weighting, const ModelOptions& options) {
  const auto res = residuals(ds, params, weighting, options);
  return {sum_sq(res), static_cast<int>(res.size()) - kP};
}

std::array<double, kP> parameter_errors(const FitResult& result) {
  if (!result.converged) {
    throw DomainError("parameter_errors: fit did not converge");
  }
  const std::size_t n = result.jacobian.size() / kP;
  auto h = normal_matrix(result.jacobian, n);
  auto l = h;
  if (!cholesky(l)) {
    std::array<double, kP> eigval{};
    std::array<double, kP * kP> eigvec{};
    jacobi_eigen(h, eigval, eigvec);
    const double vmax = *std::max_element(eigval.begin(), eigval.end());
    std::ostringstream msg;
    msg << "parameter_errors: J^T J is numerically singular; null-space directions:";
    for (int j = 0; j < kP; ++j) {
      if (eigval[j] > 1e-12 * vmax) continue;
      std::vector<int> order(kP);
      for (int k = 0; k < kP; ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::abs(eigvec[x * kP + j]) > std::abs(eigvec[y * kP + j]);
      });
      msg << " [";
      for (int t = 0; t < 3; ++t) {
        msg << (t ? ", " : "") << "a_" << order[t] + 1 << " (" << eigvec[order[t] * kP + j]
            << ")";
      }
      msg << "]";
    }
    throw SolveError(msg.str());
  }
  const double s2 = result.ndf > 0 ? result.chi2 / result.ndf : 0.0;
  std::array<double, kP> rel{};
  for (int j = 0; j < kP; ++j) {
    std::array<double, kP> e{};
    e[j] = 1.0;
    cholesky_solve(l, e);
    rel[j] = std::sqrt(s2 * e[j]) / std::abs(result.params.a[j]);
  }
  return rel;
}

}  // namespace decay
