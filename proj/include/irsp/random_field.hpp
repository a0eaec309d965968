#pragma once

// Circular complex Gaussian vector fields on the periodic grid whose
// covariance kernel is M(x) K_s(x - y) M(y)*, with K_s the periodic kernel of
// the multiplier |xi|^{-2s} (zero mode removed).

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "irsp/grid.hpp"
#include "irsp/types.hpp"

namespace irsp {

// Component-major complex 3-vector field on all grid cells.
struct VectorField {
  std::array<std::vector<cplx>, 3> comp;

  VectorField() = default;
  explicit VectorField(std::size_t cells) {
    for (auto& c : comp) c.assign(cells, cplx{});
  }
  [[nodiscard]] std::size_t cells() const { return comp[0].size(); }
  [[nodiscard]] CVec3 at(std::size_t idx) const { return {comp[0][idx], comp[1][idx], comp[2][idx]}; }
  void set(std::size_t idx, const CVec3& v) {
    for (int j = 0; j < 3; ++j) comp[j][idx] = v[j];
  }
};

inline constexpr double kMaxOrder = 2.5;

struct StrengthField {
  GridSpec grid;
  std::vector<Mat3c> A;  // per cell, zero outside support
  std::vector<Mat3c> M;  // Hermitian square root of A
  double s = 1.0;
};

struct SourceRealization {
  VectorField J;
  std::uint64_t seed = 0;
};

struct FilterOptions {
  // Spectral Leray projection of the noise onto divergence-free fields.
  bool divergence_free = false;
};

// Hermitian principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-1e-6, 0) are clipped to 0; anything lower is an InvalidInput.
Mat3c hermitian_sqrt(const Mat3c& a);

// Per-cell principal square root of an A field.
std::vector<Mat3c> factor_strength(const std::vector<Mat3c>& A);

// Builds and validates a strength field (Hermitian, PSD, real nonnegative
// diagonal, zero outside the support, s in [0, 5/2)) and factors it.
StrengthField make_strength_field(GridSpec grid, std::vector<Mat3c> A, double s);

// Circular white noise: each component (g1 + i g2) / sqrt(2) * h^{-3/2} with
// g1, g2 standard normal, drawn cell by cell in lexicographic order.
VectorField sample_white_noise(const GridSpec& grid, std::uint64_t seed);

// Multiplier |xi|^{-s} (0 at xi = 0) applied componentwise through the DFT.
VectorField fractional_filter(const VectorField& w, double s, const GridSpec& grid,
                              const FilterOptions& options = {});

// J = M u on support cells, 0 elsewhere.
SourceRealization synthesize_source(const StrengthField& strength, const VectorField& u,
                                    std::uint64_t seed = 0);

// white noise -> filter -> modulation.
SourceRealization sample_source(const StrengthField& strength, std::uint64_t seed,
                                const FilterOptions& options = {});

// Empirical law of the filtered noise: per-mode variance E|u^(xi)|^2 pooled
// over components and realizations, with a least-squares fit of
// log variance against log |xi| over modes with wave-index radius in
// [index_min, index_max]. The expected slope is -2s.
struct SpectralSlopeReport {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t modes = 0;
  std::vector<std::pair<double, double>> shells;  // (integer radius, mean variance)
};
SpectralSlopeReport spectral_slope(const GridSpec& grid, double s, std::size_t realizations,
                                   std::uint64_t master_seed, double index_min, double index_max,
                                   const FilterOptions& options = {});

// Discrete covariance operator Q v = D_M F^{-1}[kappa F[D_M^* v]] with
// kappa = |xi|^{-2s}. Q equals h^3 times the matrix of point covariances
// C_J(c, c'), i.e. the cell-quadrature form of the integral operator.
// The relation operator of the model is identically zero.
class CovarianceOperator {
 public:
  CovarianceOperator(const StrengthField& strength);

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] double order() const { return s_; }
  [[nodiscard]] const std::vector<Mat3c>& factor() const { return M_; }
  // kappa at DFT bin idx
  [[nodiscard]] const std::vector<double>& multiplier() const { return kappa_; }

  [[nodiscard]] VectorField apply(const VectorField& v) const;
  // <v, Q v> (sesquilinear, conjugate on the left)
  [[nodiscard]] cplx quadratic_form(const VectorField& v) const;
  [[nodiscard]] cplx inner(const VectorField& u, const VectorField& v) const;

  // K_s(x_c - x_c') = (1/L^3) sum_{xi != 0} |xi|^{-2s} exp(i xi.(x_c - x_c'))
  [[nodiscard]] double kernel(std::size_t c, std::size_t c_prime) const;
  // M(c) K_s(c - c') M(c')*
  [[nodiscard]] Mat3c point_covariance(std::size_t c, std::size_t c_prime) const;
  // E[J(c) J(c')^T], zero by circularity
  [[nodiscard]] Mat3c point_relation(std::size_t, std::size_t) const { return Mat3c::Zero(); }
  [[nodiscard]] bool relation_vanishes() const { return true; }

 private:
  GridSpec grid_;
  std::vector<Mat3c> M_;
  double s_;
  std::vector<double> kappa_;
  std::vector<double> kernel_table_;  // K_s at displacement bins
};

CovarianceOperator assemble_covariance(const StrengthField& strength);

}  // namespace irsp
