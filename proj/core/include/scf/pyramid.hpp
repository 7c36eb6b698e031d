#pragma once

#include <stdexcept>
#include <vector>

#include "scf/tensor.hpp"

namespace scf {

/// Fixed 5-tap binomial kernel [1,4,6,4,1]/16; the separable outer product
/// p^T p / 256 is the 2D smoothing kernel used by the pyramid. It sums to one
/// exactly, so constants are preserved at every level.
template <typename T>
struct GaussianKernel {
  static constexpr T taps[5] = {T(1) / 16, T(4) / 16, T(6) / 16, T(4) / 16, T(1) / 16};

  static Tensor<T> matrix() {
    Tensor<T> g({5, 5, 1});
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) g(i, j, 0) = taps[i] * taps[j];
    return g;
  }
};

namespace detail {

// reflect-101 boundary: ..., 2, 1, 0, 1, 2, ... (edge sample not repeated)
inline int reflect_index(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return i;
}

// One separable smoothing pass along rows (axis 0) or columns (axis 1),
// scaled by `gain`. Forward and adjoint share the same index map; the adjoint
// scatters where the forward gathers, so the pair is an exact transpose.
template <typename T>
void smooth_axis(const Tensor<T>& in, Tensor<T>& out, int axis, T gain, bool adjoint) {
  const int h = in.height(), w = in.width(), c = in.channels();
  out.zero();
  const int n = axis == 0 ? h : w;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      for (int t = -2; t <= 2; ++t) {
        const T wt = gain * GaussianKernel<T>::taps[t + 2];
        const int src = reflect_index((axis == 0 ? i : j) + t, n);
        const int si = axis == 0 ? src : i;
        const int sj = axis == 0 ? j : src;
        T* dst = adjoint ? &out(si, sj, 0) : &out(i, j, 0);
        const T* from = adjoint ? &in(i, j, 0) : &in(si, sj, 0);
        for (int k = 0; k < c; ++k) dst[k] += wt * from[k];
      }
    }
  }
}

}  // namespace detail

/// Channel-wise 5x5 binomial smoothing with reflect padding; shape preserved.
template <typename T>
Tensor<T> gaussian_smooth(const Tensor<T>& x, T gain = T(1)) {
  Tensor<T> tmp(x.dims), out(x.dims);
  detail::smooth_axis(x, tmp, 0, T(1), false);
  detail::smooth_axis(tmp, out, 1, gain, false);
  return out;
}

/// Adjoint of gaussian_smooth as a linear operator (transpose of the
/// reflect-padded convolution, not the convolution of a padded input).
template <typename T>
Tensor<T> gaussian_smooth_adjoint(const Tensor<T>& g, T gain = T(1)) {
  Tensor<T> tmp(g.dims), out(g.dims);
  detail::smooth_axis(g, tmp, 1, gain, true);
  detail::smooth_axis(tmp, out, 0, T(1), true);
  return out;
}

/// Keeps even-indexed samples along both spatial axes.
template <typename T>
Tensor<T> downsample(const Tensor<T>& x) {
  const int h = x.height(), w = x.width(), c = x.channels();
  const int oh = (h + 1) / 2, ow = (w + 1) / 2;
  Tensor<T> out({oh, ow, c});
  for (int i = 0; i < oh; ++i)
    for (int j = 0; j < ow; ++j)
      for (int k = 0; k < c; ++k) out(i, j, k) = x(2 * i, 2 * j, k);
  return out;
}

/// Adjoint of downsample: zero-stuffs odd positions of a (2h, 2w) grid.
template <typename T>
Tensor<T> downsample_adjoint(const Tensor<T>& g, int h, int w) {
  Tensor<T> out({h, w, g.channels()});
  for (int i = 0; i < g.height(); ++i)
    for (int j = 0; j < g.width(); ++j)
      for (int k = 0; k < g.channels(); ++k) out(2 * i, 2 * j, k) = g(i, j, k);
  return out;
}

/// Zero-insertion upsampling to (2h, 2w) followed by smoothing with the
/// gain-4 kernel, the classic expand operator: constants map to constants.
template <typename T>
Tensor<T> upsample_smooth(const Tensor<T>& x) {
  const int h = x.height(), w = x.width(), c = x.channels();
  Tensor<T> stuffed({2 * h, 2 * w, c});
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j)
      for (int k = 0; k < c; ++k) stuffed(2 * i, 2 * j, k) = x(i, j, k);
  return gaussian_smooth(stuffed, T(4));
}

template <typename T>
Tensor<T> upsample_smooth_adjoint(const Tensor<T>& g) {
  Tensor<T> sm = gaussian_smooth_adjoint(g, T(4));
  const int oh = g.height() / 2, ow = g.width() / 2;
  Tensor<T> out({oh, ow, g.channels()});
  for (int i = 0; i < oh; ++i)
    for (int j = 0; j < ow; ++j)
      for (int k = 0; k < g.channels(); ++k) out(i, j, k) = sm(2 * i, 2 * j, k);
  return out;
}

/// L high-frequency residuals (full resolution down to H/2^(L-1)) plus the
/// low-pass base at H/2^L. Level 0 is the finest residual.
template <typename T>
struct PyramidDecomposition {
  std::vector<Tensor<T>> residuals;
  Tensor<T> low;
  int levels() const { return static_cast<int>(residuals.size()); }
};

template <typename T>
PyramidDecomposition<T> lp_decompose(const Tensor<T>& x, int levels) {
  if (levels < 0) throw std::invalid_argument("lp_decompose: negative level count");
  const int h = x.height(), w = x.width();
  const int div = 1 << levels;
  if (h % div != 0 || w % div != 0)
    throw std::invalid_argument("lp_decompose: spatial dims must divide 2^levels");

  PyramidDecomposition<T> out;
  Tensor<T> cur = x;
  for (int l = 0; l < levels; ++l) {
    Tensor<T> next = downsample(gaussian_smooth(cur));
    Tensor<T> up = upsample_smooth(next);
    Tensor<T> res(cur.dims);
    for (std::int64_t i = 0; i < cur.size(); ++i) res.data[i] = cur.data[i] - up.data[i];
    out.residuals.push_back(std::move(res));
    cur = std::move(next);
  }
  out.low = std::move(cur);
  return out;
}

/// Exact inverse of lp_decompose for untouched decompositions.
template <typename T>
Tensor<T> lp_reconstruct(const PyramidDecomposition<T>& d) {
  Tensor<T> cur = d.low;
  for (int l = d.levels() - 1; l >= 0; --l) {
    Tensor<T> up = upsample_smooth(cur);
    if (!up.same_shape(d.residuals[static_cast<std::size_t>(l)]))
      throw std::invalid_argument("lp_reconstruct: inconsistent residual shapes");
    for (std::int64_t i = 0; i < up.size(); ++i)
      up.data[i] += d.residuals[static_cast<std::size_t>(l)].data[i];
    cur = std::move(up);
  }
  return cur;
}

}  // namespace scf
