#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scf/rng.hpp"

namespace scf {

/// Dense row-major tensor of rank 1..4. Feature maps are rank 3 laid out as
/// (height, width, channels) with the channel axis contiguous, matching the
/// on-disk sample layout. Convolution weights are rank 4 (k, k, c_in, c_out)
/// or rank 3 (k, k, c) for depthwise kernels.
template <typename T>
struct Tensor {
  std::vector<int> dims;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> d) : dims(std::move(d)), data(checked_count(dims), T(0)) {}

  static std::int64_t checked_count(const std::vector<int>& d) {
    if (d.empty() || d.size() > 4) throw std::invalid_argument("tensor rank must be 1..4");
    std::int64_t n = 1;
    for (int x : d) {
      if (x <= 0) throw std::invalid_argument("tensor dims must be positive");
      n *= x;
    }
    return n;
  }

  std::int64_t size() const { return static_cast<std::int64_t>(data.size()); }
  int rank() const { return static_cast<int>(dims.size()); }
  int dim(int i) const { return dims[static_cast<std::size_t>(i)]; }
  bool same_shape(const Tensor& o) const { return dims == o.dims; }

  int height() const { assert(rank() == 3); return dims[0]; }
  int width() const { assert(rank() == 3); return dims[1]; }
  int channels() const { assert(rank() == 3); return dims[2]; }

  T& operator()(int i, int j, int k) {
    assert(rank() == 3);
    return data[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k];
  }
  const T& operator()(int i, int j, int k) const {
    assert(rank() == 3);
    return data[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k];
  }

  T& at4(int a, int b, int c, int d) {
    assert(rank() == 4);
    return data[((static_cast<std::size_t>(a) * dims[1] + b) * dims[2] + c) * dims[3] + d];
  }
  const T& at4(int a, int b, int c, int d) const {
    assert(rank() == 4);
    return data[((static_cast<std::size_t>(a) * dims[1] + b) * dims[2] + c) * dims[3] + d];
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }
  void zero() { fill(T(0)); }
};

using Tensorf = Tensor<float>;
using Tensord = Tensor<double>;

template <typename T>
Tensor<T> zeros3(int h, int w, int c) {
  return Tensor<T>({h, w, c});
}

template <typename T>
Tensor<T> full_like(const Tensor<T>& x, T v) {
  Tensor<T> out(x.dims);
  out.fill(v);
  return out;
}

template <typename T>
Tensor<T> random_uniform(std::vector<int> dims, Rng& rng, T lo = T(0), T hi = T(1)) {
  Tensor<T> out(std::move(dims));
  for (auto& v : out.data) v = static_cast<T>(rng.uniform(static_cast<double>(lo), static_cast<double>(hi)));
  return out;
}

template <typename T>
Tensor<T> random_normal(std::vector<int> dims, Rng& rng, T stddev = T(1), T mean = T(0)) {
  Tensor<T> out(std::move(dims));
  for (auto& v : out.data) v = static_cast<T>(mean + stddev * static_cast<T>(rng.normal()));
  return out;
}

template <typename To, typename From>
Tensor<To> tensor_cast(const Tensor<From>& x) {
  Tensor<To> out(x.dims);
  for (std::int64_t i = 0; i < x.size(); ++i) out.data[i] = static_cast<To>(x.data[i]);
  return out;
}

template <typename T>
T max_abs(const Tensor<T>& x) {
  T m = T(0);
  for (const T& v : x.data) m = std::max(m, std::abs(v));
  return m;
}

template <typename T>
T max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  T m = T(0);
  for (std::int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

template <typename T>
double sum_squares(const Tensor<T>& x) {
  double s = 0.0;
  for (const T& v : x.data) s += static_cast<double>(v) * static_cast<double>(v);
  return s;
}

template <typename T>
bool all_finite(const Tensor<T>& x) {
  for (const T& v : x.data)
    if (!std::isfinite(static_cast<double>(v))) return false;
  return true;
}

}  // namespace scf
