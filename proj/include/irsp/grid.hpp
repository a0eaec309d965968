#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "irsp/types.hpp"

namespace irsp {

// Even n whose only prime factors are 2, 3 and 5.
bool fft_friendly(int n);

// Periodic cubic grid of n^3 cells with side L. Cell (i, j, l) has linear
// index (i * n + j) * n + l and center origin + (idx + 1/2) h.
class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(double L, int n, Vec3 origin);
  // Box [-L/2, L/2]^3.
  static GridSpec centered(double L, int n);

  [[nodiscard]] double L() const { return L_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double h() const { return L_ / n_; }
  [[nodiscard]] double cell_volume() const { const double s = h(); return s * s * s; }
  [[nodiscard]] const Vec3& origin() const { return origin_; }
  [[nodiscard]] std::size_t cell_count() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  [[nodiscard]] std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }
  [[nodiscard]] std::array<int, 3> coords(std::size_t idx) const;
  [[nodiscard]] Vec3 center(std::size_t idx) const;

  // Integer wave index of DFT bin m (0 <= m < n): m for m < n/2, m - n otherwise.
  [[nodiscard]] int wave_index(int m) const { return m < n_ / 2 ? m : m - n_; }
  // Angular wave vector of the DFT bin at linear index idx.
  [[nodiscard]] Vec3 wave_vector(std::size_t idx) const;

  void set_ball_support(const Vec3& center, double radius);
  void set_box_support(const Vec3& center, const Vec3& half_extent);
  void set_support(std::vector<std::uint8_t> mask);
  [[nodiscard]] bool in_support(std::size_t idx) const { return support_[idx] != 0; }
  [[nodiscard]] const std::vector<std::uint8_t>& support() const { return support_; }
  // Support cell indices in increasing (lexicographic) order.
  [[nodiscard]] const std::vector<std::size_t>& support_cells() const { return support_cells_; }

  // n >= 8, even and 2,3,5-smooth; support cells keep a 2h clearance from
  // every face.
  void validate() const;

  [[nodiscard]] nlohmann::json to_json() const;

 private:
  void rebuild_support_list();

  double L_ = 1.0;
  int n_ = 8;
  Vec3 origin_ = Vec3::Zero();
  std::vector<std::uint8_t> support_;
  std::vector<std::size_t> support_cells_;
};

}  // namespace irsp
