#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "decay/constants.hpp"
#include "decay/kramers.hpp"
#include "decay/nuclide.hpp"

namespace decay {

enum class WeightingKind { Unit, ExperimentalLogSigma, Custom };

/// How residuals are weighted. ExperimentalLogSigma divides each residual by
/// sigma_lg = lg(e) * dT/T built from the record's (symmetrized) half-life
/// error; Custom supplies one weight per fit record.
struct Weighting {
  WeightingKind kind = WeightingKind::Unit;
  std::vector<double> custom;

  static Weighting unit() { return {}; }
  static Weighting experimental_sigma() { return {WeightingKind::ExperimentalLogSigma, {}}; }
  static Weighting custom_weights(std::vector<double> w) {
    return {WeightingKind::Custom, std::move(w)};
  }
};

/// Model evaluation choices shared by all solver entry points.
struct ModelOptions {
  RadiusVariant variant = RadiusVariant::DaughterMass;
  PhysicalConstants constants{};
};

struct FitConfig {
  Weighting weighting{};
  double damping_init = 1e-3;    // lambda_0
  double damping_grow = 8.0;
  double damping_shrink = 0.25;
  double regularization = 0.0;   // Tikhonov weight on ||a - a_ref||^2
  std::optional<ParameterSet> a_ref;  // reference point; zero vector if absent
  int max_iter = 200;
  double step_tol = 1e-10;       // relative step size below which we stop
  double fd_step = 1e-6;         // relative finite-difference step
  ModelOptions model{};

  void validate() const;
};

struct IterationRecord {
  double objective = 0.0;
  double lambda = 0.0;
};

struct FitResult {
  ParameterSet params;
  std::vector<double> residuals;            // weighted, fit records only
  double chi2 = 0.0;
  int ndf = 0;
  double rms_lg = 0.0;
  std::array<double, 20> covariance_diag{};  // NaN-filled if J^T J is singular
  std::vector<IterationRecord> iterations;   // accepted objectives, decreasing
  bool converged = false;
  std::vector<double> jacobian;              // final J, row-major n_fit x 20
};

/// Per fit record: weight * (lg T_model - lg10 T_exp). Validate/Predict
/// records are skipped. Throws DegenerateParameterization naming the record.
std::vector<double> residuals(const Dataset& ds, const ParameterSet& params,
                              const Weighting& weighting, const ModelOptions& options = {});

/// Finite-difference Jacobian of the weighted residuals, row-major n x 20.
/// Forward differences with step max(fd_step * |a_j|, 1e-8); central
/// differences when `central` is set.
std::vector<double> jacobian(const Dataset& ds, const ParameterSet& params, double fd_step,
                             const Weighting& weighting, bool central = false,
                             const ModelOptions& options = {});

/// Damped, Tikhonov-regularized Gauss-Newton over the fit subset.
/// Steps solve (J^T J + reg I + lambda D) delta = -(J^T r + reg (a - a_ref))
/// with D = diag(J^T J); a step is kept only if the regularized objective
/// decreases (lambda shrinks on accept, grows on reject). Non-convergence is
/// returned as data (converged = false), not thrown.
FitResult fit(const Dataset& ds, const ParameterSet& init, const FitConfig& config);

/// (chi2, ndf) of the weighted residuals; ndf = fit-record count - 20.
std::pair<double, int> chi_square(const Dataset& ds, const ParameterSet& params,
                                  const Weighting& weighting, const ModelOptions& options = {});

/// Relative parameter errors sqrt(diag(s^2 (J^T J)^-1)) / |a_i| with
/// s^2 = chi2/ndf, from the converged fit. Throws SolveError with a
/// rank-deficiency report (naming the null-space directions) if J^T J is
/// numerically singular.
std::array<double, 20> parameter_errors(const FitResult& result);

}  // namespace decay
