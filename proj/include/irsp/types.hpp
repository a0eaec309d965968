#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace irsp {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;
using MatXc = Eigen::MatrixXcd;
using MatXd = Eigen::MatrixXd;
using VecXd = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Precondition or input validation failure.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometric or numerical domain violation (coincident points, inadmissible k).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace irsp
