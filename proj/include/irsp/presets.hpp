#pragma once

// Smooth compactly supported strength models A(x).

#include <string>

#include "irsp/random_field.hpp"

namespace irsp {

// exp(1 - 1/(1 - |x-c|^2/rho^2)) on |x-c| < rho, 0 elsewhere; peak value 1.
double smooth_bump(const Vec3& x, const Vec3& center, double radius);

struct PresetParams {
  std::string name = "isotropic-bump";  // isotropic-bump | anisotropic-hermitian | two-blob
  double amplitude = 1.0;
  Vec3 center = Vec3::Zero();
  double radius = 0.5;
  // anisotropic-hermitian: a_12 = i gamma bump_2(x), bump_2 centered at
  // center + offset with radius radius_2; a_33 = beta * amplitude * bump(x)
  double gamma = 0.5;
  double beta = 0.5;
  // two-blob: second bump amplitude, center and radius
  double amplitude_2 = 0.5;
  Vec3 offset = Vec3::Zero();
  double radius_2 = 0.25;
};

// Per-cell strength matrices of a preset, masked to the grid support.
std::vector<Mat3c> preset_strength(const GridSpec& grid, const PresetParams& params);

}  // namespace irsp
