#pragma once

// Second-order algebra of complex Gaussian vectors Z = X + iY.
//
// A ComplexDescriptor holds the covariance C = E[Z Z*] and relation
// R = E[Z Z^T]; a RealBlockDescriptor holds the real-part blocks
// Vxx = E[X X^T], Vyy = E[Y Y^T], Vxy = E[X Y^T], Vyx = E[Y X^T].

#include <nlohmann/json.hpp>

#include "irsp/types.hpp"

namespace irsp {

struct ComplexDescriptor {
  MatXc C;
  MatXc R;
  [[nodiscard]] Eigen::Index dim() const { return C.rows(); }
};

struct RealBlockDescriptor {
  MatXd Vxx;
  MatXd Vyy;
  MatXd Vxy;
  MatXd Vyx;
  [[nodiscard]] Eigen::Index dim() const { return Vxx.rows(); }
  // [[Vxx, Vxy], [Vyx, Vyy]]
  [[nodiscard]] MatXd stacked() const;
};

struct DescriptorReport {
  double hermitian_defect = 0.0;  // max |C - C*|
  double symmetry_defect = 0.0;   // max |R - R^T|
  double min_eigenvalue = 0.0;    // of the induced 2n x 2n real block matrix
  [[nodiscard]] bool valid(double tol = 1e-10) const {
    return hermitian_defect <= tol && symmetry_defect <= tol && min_eigenvalue >= -tol;
  }
};

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

// C = Vxx + Vyy + i(Vyx - Vxy), R = Vxx - Vyy + i(Vyx + Vxy).
// Throws InvalidInput when the blocks violate symmetry beyond kSymmetryTol.
ComplexDescriptor complex_from_real(const RealBlockDescriptor& v);

// Vxx = Re(C+R)/2, Vyy = Re(C-R)/2, Vxy = Im(R-C)/2, Vyx = Im(R+C)/2.
// Throws InvalidInput when the induced block matrix has an eigenvalue below
// -kPsdTol.
RealBlockDescriptor real_from_complex(const ComplexDescriptor& d);

// Pure report; never throws for square inputs of equal size.
DescriptorReport validate_descriptor(const ComplexDescriptor& d);

// Smallest eigenvalue of a real symmetric matrix (symmetrized first).
double min_symmetric_eigenvalue(const MatXd& m);

nlohmann::json to_json(const ComplexDescriptor& d);
ComplexDescriptor complex_descriptor_from_json(const nlohmann::json& j);

// Row-major [[re, im], ...] encoding used by every persisted complex matrix.
nlohmann::json complex_matrix_to_json(const MatXc& m);
MatXc complex_matrix_from_json(const nlohmann::json& j);

}  // namespace irsp
