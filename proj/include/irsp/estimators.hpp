#pragma once

// Second-moment statistics of field ensembles: sample covariance and relation
// with standard errors, high-frequency scaling k^{2s-2}, single-path
// frequency-band averages, and Gaussian fourth-moment / decorrelation checks.

#include <cstdint>
#include <vector>

#include "irsp/forward_solver.hpp"

namespace irsp {

// Index (ik * receivers + ir) for every per-(receiver, frequency) table.
struct MomentEstimates {
  std::size_t receivers = 0;
  std::vector<double> ks;
  std::size_t N = 0;
  std::vector<Mat3c> Chat;  // (1/N) sum E E*, Hermitian
  std::vector<Mat3c> Rhat;  // (1/N) sum E E^T
  // Standard errors packed as complex(stderr of real part, stderr of imag part).
  std::vector<Mat3c> C_stderr;
  std::vector<Mat3c> R_stderr;
  std::vector<double> hermitian_defect;  // pre-symmetrization max |C - C*|

  [[nodiscard]] std::size_t slot(std::size_t ik, std::size_t ir) const { return ik * receivers + ir; }
};

struct ScaledMoments {
  std::size_t receivers = 0;
  std::vector<double> ks;
  double s = 0.0;
  std::vector<Mat3c> values;  // k^{2s-2} Chat
  [[nodiscard]] std::size_t slot(std::size_t ik, std::size_t ir) const { return ik * receivers + ir; }
};

struct ErgodicAverage {
  double K = 0.0;
  std::size_t nodes = 0;
  std::vector<std::array<double, 3>> values;  // per receiver, per component
};

struct FourthMomentReport {
  double lhs = 0.0;  // Monte Carlo E[(X^2 - EX^2)(Y^2 - EY^2)]
  double rhs = 0.0;  // 2 (E[XY])^2
  double std_error = 0.0;
  double z = 0.0;
};

struct DecorrelationRow {
  double separation = 0.0;     // |k1 - k2|
  double mean_abs_corr = 0.0;  // over receivers, components and pairs at this separation
  double max_abs_corr = 0.0;
  std::size_t pairs = 0;
};

struct DecorrelationReport {
  std::vector<DecorrelationRow> table;
  double fitted_exponent = 0.0;  // slope of log mean|corr| vs log(1 + sep)
  double min_separation = 8.0;
  double max_abs_corr_far = 0.0;       // max over pairs with sep >= min_separation
  double std_error_far = 0.0;           // stderr attained at that maximum
  std::size_t far_violations = 0;      // pairs with |corr| > max(4 stderr, 0.2)
  std::size_t far_pairs = 0;
  double max_relation_z = 0.0;         // max |Rhat| / stderr across all (k1, k2) pairs
  bool growth_flag = false;            // mean |corr| rising with separation beyond noise
  [[nodiscard]] bool passed() const { return far_violations == 0; }
};

double scale_factor(double k, double s);

MomentEstimates ensemble_moments(const FieldEnsemble& ens);
ScaledMoments scale_moments(const MomentEstimates& m, double s);
// Same scaling applied to arbitrary per-(receiver, frequency) matrices.
ScaledMoments scale_values(const std::vector<Mat3c>& values, std::size_t receivers,
                           const std::vector<double>& ks, double s);
std::vector<Mat3c> unscale_moments(const ScaledMoments& m);

// (1/(K-1)) int_1^K f(k) dk by the trapezoid rule on the nodes of ks within
// [1, K]; requires nodes at 1 and K and at least 8 nodes in between inclusive.
double band_average(const std::vector<double>& ks, const std::vector<double>& values, double K);

// Band average of k^{2s-2} |E_j(x; k)|^2 for one realization.
ErgodicAverage ergodic_average(const FieldEnsemble& ens, std::size_t realization, double s, double K);

// The same band average applied to the diagonals of per-frequency moment
// matrices moments[ik][ir], e.g. exact second moments: the expectation of the
// single-path average.
ErgodicAverage band_average_moments(const std::vector<double>& ks, const std::vector<std::vector<Mat3c>>& moments,
                                    double s, double K);

FourthMomentReport fourth_moment_check(const Eigen::Matrix2d& cov, std::size_t N, std::uint64_t seed);

// Correlation of Y_j(x; k) = k^{2s-2}(|E_j|^2 - mean) across realizations.
DecorrelationReport decorrelation_diagnostic(const FieldEnsemble& ens, double s, double min_separation = 8.0);

}  // namespace irsp
