#pragma once

#include <span>

#include "irsp/types.hpp"

namespace irsp {

// Complex 3D DFT on an n^3 row-major array, backed by FFTW.
// forward:  X(m) = sum_c x(c) exp(-2 pi i m.c / n)       (unnormalized)
// backward: x(c) = sum_m X(m) exp(+2 pi i m.c / n)       (unnormalized)
// inverse:  backward / n^3
// Instances are not shareable across threads; give each worker its own.
class Fft3 {
 public:
  explicit Fft3(int n);
  ~Fft3();
  Fft3(const Fft3&) = delete;
  Fft3& operator=(const Fft3&) = delete;

  [[nodiscard]] int n() const { return n_; }
  void forward(std::span<cplx> data);
  void backward(std::span<cplx> data);
  void inverse(std::span<cplx> data);

 private:
  void run(void* plan, std::span<cplx> data);

  int n_;
  std::size_t size_;
  void* buffer_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace irsp
