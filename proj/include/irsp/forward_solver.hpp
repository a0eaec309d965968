#pragma once

// Volume-potential evaluation E(x) = ik int Phi_k(x, y) J(y) dy of cellwise
// constant sources at exterior receivers, H = curl E / (ik), and the exact
// second moments of E under the discrete sampling model.

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "irsp/random_field.hpp"

namespace irsp {

struct Receiver {
  int id = 0;
  Vec3 position = Vec3::Zero();
};
using ReceiverSet = std::vector<Receiver>;

// Largest admissible k for spacing h (k h <= 2).
inline constexpr double kMaxKh = 2.0;
inline double max_admissible_k(double h) { return kMaxKh / h; }

// Default receiver clearance 0.5 h ceil(n / 8).
double default_min_distance(const GridSpec& grid);

// Throws DomainError naming the largest admissible k.
void check_admissible(double k, const GridSpec& grid);
// Throws InvalidInput when a receiver is closer than d_min to a support cell.
void check_receivers(const GridSpec& grid, const ReceiverSet& receivers, double d_min);

struct QuadratureOptions {
  int order = 0;      // Gauss-Legendre points per axis; 0 selects min(4, ceil(k h / 2) + 1)
  int subdivide = 1;  // split each cell into subdivide^3 children first
};

int auto_quadrature_order(double k, double h);

// Phi_k(x, y) = exp(ik|x-y|) / (4 pi |x-y|); DomainError if |x-y| < 1e-12.
cplx green(double k, const Vec3& x, const Vec3& y);
// grad_x Phi_k(x, y) = (ik - 1/r) Phi_k (x - y) / r
CVec3 grad_green(double k, const Vec3& x, const Vec3& y);

// Cell quadrature weights q_c(x; k) = int_cell Phi_k(x, y) dy over the support
// cells (in support_cells() order), with optional gradient weights.
struct CellWeights {
  std::vector<cplx> q;
  std::vector<CVec3> grad;
};
CellWeights cell_weights(const GridSpec& grid, const Vec3& x, double k, const QuadratureOptions& options,
                         bool with_gradient = false);

// E(x) = ik sum_c q_c(x; k) J_c
std::vector<CVec3> evaluate_field(const GridSpec& grid, const SourceRealization& source,
                                  const ReceiverSet& receivers, double k, const QuadratureOptions& options = {});
// H(x) = sum_c grad_x q_c(x; k) x J_c
std::vector<CVec3> evaluate_magnetic(const GridSpec& grid, const SourceRealization& source,
                                     const ReceiverSet& receivers, double k,
                                     const QuadratureOptions& options = {});

// E[E(x; k1) E(x; k2)^*] per receiver, evaluated exactly through the FFT
// action of the covariance core. k1 == k2 gives the second moment.
std::vector<Mat3c> exact_cross_moment(const CovarianceOperator& Q, const ReceiverSet& receivers, double k1,
                                      double k2, const QuadratureOptions& options = {});
std::vector<Mat3c> exact_second_moment(const CovarianceOperator& Q, const ReceiverSet& receivers, double k,
                                       const QuadratureOptions& options = {});
// E[E(x; k1) E(x; k2)^T]: built from the relation kernel of the model, which
// is identically zero.
std::vector<Mat3c> exact_relation_moment(const CovarianceOperator& Q, const ReceiverSet& receivers, double k1,
                                         double k2, const QuadratureOptions& options = {});

// Dense O(N^2) evaluation of the same second moment; test sizes only.
std::vector<Mat3c> exact_second_moment_dense(const CovarianceOperator& Q, const ReceiverSet& receivers,
                                             double k, const QuadratureOptions& options = {});

// E and optionally H values for (realization, frequency, receiver).
struct FieldEnsemble {
  ReceiverSet receivers;
  std::vector<double> ks;
  std::size_t realizations = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<CVec3> E;
  std::vector<CVec3> H;  // empty unless requested
  double s = 0.0;

  [[nodiscard]] std::size_t slot(std::size_t r, std::size_t ik, std::size_t ir) const {
    return (r * ks.size() + ik) * receivers.size() + ir;
  }
  [[nodiscard]] const CVec3& e(std::size_t r, std::size_t ik, std::size_t ir) const { return E[slot(r, ik, ir)]; }
};

struct EnsembleOptions {
  QuadratureOptions quadrature;
  FilterOptions filter;
  bool magnetic = false;
};

// N realizations with seeds realization_seed(master_seed, r), r = 0..N-1.
// Bitwise independent of the worker count.
FieldEnsemble simulate_ensemble(const StrengthField& strength, const ReceiverSet& receivers,
                                const std::vector<double>& ks, std::size_t realizations,
                                std::uint64_t master_seed, const EnsembleOptions& options = {});

}  // namespace irsp
