#pragma once

// Inverse step: the strength-to-data map a -> (1/(4 pi)^2) int a(y) / |x - y|^2 dy
// discretized on a (coarse) cell set, and Tikhonov-regularized recovery of
// strength matrix entries from scaled second-moment data.

#include <vector>

#include "irsp/forward_solver.hpp"

namespace irsp {

// Cell-centered recovery cells: a subset of a regular grid.
struct RecoveryGrid {
  GridSpec grid;                    // coarse grid geometry
  std::vector<std::size_t> cells;   // active coarse cells (unknowns), increasing
  [[nodiscard]] std::size_t size() const { return cells.size(); }
  [[nodiscard]] Vec3 center(std::size_t i) const { return grid.center(cells[i]); }
};

// Coarsens the synthesis grid by an integer factor; unknowns are the coarse
// cells at least half filled by fine support cells.
RecoveryGrid make_recovery_grid(const GridSpec& fine, int factor);
// Recovery on the support cells of the grid itself.
RecoveryGrid support_recovery_grid(const GridSpec& grid);

// Volume average of a fine per-cell field over each active coarse cell.
std::vector<Mat3c> restrict_to_recovery_grid(const GridSpec& fine, const std::vector<Mat3c>& values,
                                             const RecoveryGrid& coarse);

struct StrengthKernel {
  MatXd G;  // G(r, c) = h^3 / ((4 pi)^2 |x_r - y_c|^2)
  double cell_volume = 0.0;
};

StrengthKernel assemble_strength_kernel(const RecoveryGrid& cells, const ReceiverSet& receivers);

// T = G a
VecXd forward_strength(const StrengthKernel& kernel, const VecXd& a);
// T_jl(x) = (1/(4 pi)^2) sum_c h^3 A_jl(c) / |x - y_c|^2 for every receiver
std::vector<Mat3c> forward_strength_matrix(const StrengthKernel& kernel, const std::vector<Mat3c>& A);

struct TikhonovOptions {
  bool nonneg = false;
};

struct TikhonovResult {
  VecXd a;
  double lambda = 0.0;            // normalized weight as given
  double lambda_effective = 0.0;  // lambda * sigma_max(G)^2
  double data_scale = 0.0;        // ||T||, data are divided by this before solving
  double residual_norm = 0.0;     // ||G a - T||
  double solution_norm = 0.0;     // ||a||
};

// argmin ||G a - T||^2 + lambda sigma_max(G)^2 ||a||^2, optionally over a >= 0.
TikhonovResult tikhonov_recover(const StrengthKernel& kernel, const VecXd& T, double lambda,
                                const TikhonovOptions& options = {});

// Non-negative least squares min ||A x - b|| s.t. x >= 0 (Lawson-Hanson).
VecXd nnls(const MatXd& A, const VecXd& b, int max_iterations = 0);

struct RecoveryResult {
  std::vector<Mat3c> Ahat;  // exactly Hermitian
  double lambda = 0.0;
  Eigen::Matrix3d residual_norm = Eigen::Matrix3d::Zero();  // real-part solves
  Eigen::Matrix3d solution_norm = Eigen::Matrix3d::Zero();
  double hermitian_defect = 0.0;     // max over cells of ||Ahat - Ahat*||_F before symmetrization
  double diagonal_imag_residual = 0.0;  // max |Im a_jj| before symmetrization
};

struct RecoveryOptions {
  bool nonneg_diagonal = true;
};

// Entrywise recovery from per-receiver scaled moment matrices D(x) ~ G A.
RecoveryResult recover_strength_matrix(const std::vector<Mat3c>& scaled, const StrengthKernel& kernel,
                                       double lambda, const RecoveryOptions& options = {});

// c0 of the least-squares fit v(k) = c0 + c1 / k over the given frequencies,
// applied entrywise per receiver. scaled[ik][ir].
std::vector<Mat3c> extrapolate_high_frequency(const std::vector<double>& ks,
                                              const std::vector<std::vector<Mat3c>>& scaled);

struct LCurvePoint {
  double lambda = 0.0;
  double residual_norm = 0.0;
  double solution_norm = 0.0;
};
std::vector<LCurvePoint> lcurve_sweep(const StrengthKernel& kernel, const VecXd& T, const std::vector<double>& lambdas,
                                      const TikhonovOptions& options = {});

// ||x - ref|| / ||ref||
double relative_l2_error(const VecXd& x, const VecXd& ref);

}  // namespace irsp
