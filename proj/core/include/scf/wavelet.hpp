#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "scf/tensor.hpp"

namespace scf {

/// 2x2 orthonormal analysis filter bank. The default is Haar with the exact
/// +-1/2 entries; other orthonormal banks can be plugged in since the
/// transform code only relies on orthonormality for invertibility.
/// Filters are stored row-major: f[s] = {f(0,0), f(0,1), f(1,0), f(1,1)}.
template <typename T>
struct FilterBank2x2 {
  std::array<std::array<T, 4>, 4> f;  // LL, LH, HL, HH

  static FilterBank2x2 haar() {
    const T h = T(1) / 2;
    return FilterBank2x2{{{
        {{h, h, h, h}},      // LL
        {{h, -h, h, -h}},    // LH: horizontal detail
        {{h, h, -h, -h}},    // HL: vertical detail
        {{h, -h, -h, h}},    // HH: diagonal detail
    }}};
  }
};

/// One decomposition level: four half-resolution subbands (channels last,
/// same channel count as the input).
template <typename T>
struct WaveletComponents {
  int level = 1;
  Tensor<T> ll, lh, hl, hh;
};

namespace detail {

// Packed layout used by the transform kernels: (h/2, w/2, 4c) with subband
// blocks ordered [LL | LH | HL | HH], each c channels wide.
template <typename T>
Tensor<T> wt_packed(const Tensor<T>& x, const FilterBank2x2<T>& bank) {
  const int h = x.height(), w = x.width(), c = x.channels();
  if (h % 2 != 0 || w % 2 != 0)
    throw std::invalid_argument("wt: spatial dims must be even");
  Tensor<T> out({h / 2, w / 2, 4 * c});
  for (int i = 0; i < h / 2; ++i) {
    for (int j = 0; j < w / 2; ++j) {
      const T* a = &x(2 * i, 2 * j, 0);
      const T* b = &x(2 * i, 2 * j + 1, 0);
      const T* d = &x(2 * i + 1, 2 * j, 0);
      const T* e = &x(2 * i + 1, 2 * j + 1, 0);
      T* o = &out(i, j, 0);
      for (int s = 0; s < 4; ++s) {
        const auto& fs = bank.f[static_cast<std::size_t>(s)];
        for (int k = 0; k < c; ++k)
          o[s * c + k] = fs[0] * a[k] + fs[1] * b[k] + fs[2] * d[k] + fs[3] * e[k];
      }
    }
  }
  return out;
}

template <typename T>
Tensor<T> iwt_packed(const Tensor<T>& sub, const FilterBank2x2<T>& bank) {
  const int hh = sub.height(), hw = sub.width(), c4 = sub.channels();
  if (c4 % 4 != 0) throw std::invalid_argument("iwt: packed channels must be 4*c");
  const int c = c4 / 4;
  Tensor<T> out({2 * hh, 2 * hw, c});
  for (int i = 0; i < hh; ++i) {
    for (int j = 0; j < hw; ++j) {
      const T* s0 = &sub(i, j, 0);
      T* a = &out(2 * i, 2 * j, 0);
      T* b = &out(2 * i, 2 * j + 1, 0);
      T* d = &out(2 * i + 1, 2 * j, 0);
      T* e = &out(2 * i + 1, 2 * j + 1, 0);
      for (int s = 0; s < 4; ++s) {
        const auto& fs = bank.f[static_cast<std::size_t>(s)];
        for (int k = 0; k < c; ++k) {
          const T v = s0[s * c + k];
          a[k] += fs[0] * v;
          b[k] += fs[1] * v;
          d[k] += fs[2] * v;
          e[k] += fs[3] * v;
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Single-level 2D wavelet transform: per-channel stride-2 cross-correlation
/// with the four bank filters, no padding.
template <typename T>
WaveletComponents<T> wt(const Tensor<T>& x,
                        const FilterBank2x2<T>& bank = FilterBank2x2<T>::haar()) {
  Tensor<T> packed = detail::wt_packed(x, bank);
  const int h2 = packed.height(), w2 = packed.width(), c = packed.channels() / 4;
  WaveletComponents<T> out;
  out.level = 1;
  out.ll = Tensor<T>({h2, w2, c});
  out.lh = Tensor<T>({h2, w2, c});
  out.hl = Tensor<T>({h2, w2, c});
  out.hh = Tensor<T>({h2, w2, c});
  for (int i = 0; i < h2; ++i)
    for (int j = 0; j < w2; ++j)
      for (int k = 0; k < c; ++k) {
        out.ll(i, j, k) = packed(i, j, k);
        out.lh(i, j, k) = packed(i, j, c + k);
        out.hl(i, j, k) = packed(i, j, 2 * c + k);
        out.hh(i, j, k) = packed(i, j, 3 * c + k);
      }
  return out;
}

/// Exact inverse of wt (transposed convolution with the same bank).
template <typename T>
Tensor<T> iwt(const WaveletComponents<T>& comp,
              const FilterBank2x2<T>& bank = FilterBank2x2<T>::haar()) {
  if (!comp.ll.same_shape(comp.lh) || !comp.ll.same_shape(comp.hl) ||
      !comp.ll.same_shape(comp.hh))
    throw std::invalid_argument("iwt: subband shape mismatch");
  const int h2 = comp.ll.height(), w2 = comp.ll.width(), c = comp.ll.channels();
  Tensor<T> packed({h2, w2, 4 * c});
  for (int i = 0; i < h2; ++i)
    for (int j = 0; j < w2; ++j)
      for (int k = 0; k < c; ++k) {
        packed(i, j, k) = comp.ll(i, j, k);
        packed(i, j, c + k) = comp.lh(i, j, k);
        packed(i, j, 2 * c + k) = comp.hl(i, j, k);
        packed(i, j, 3 * c + k) = comp.hh(i, j, k);
      }
  return detail::iwt_packed(packed, bank);
}

/// Cascaded decomposition: the transform recurses on the LL band only.
/// Entry i holds the level-(i+1) subbands at spatial size H/2^(i+1).
template <typename T>
std::vector<WaveletComponents<T>> wt_cascade(
    const Tensor<T>& x, int levels,
    const FilterBank2x2<T>& bank = FilterBank2x2<T>::haar()) {
  if (levels < 1) throw std::invalid_argument("wt_cascade: levels must be >= 1");
  const int div = 1 << levels;
  if (x.height() % div != 0 || x.width() % div != 0)
    throw std::invalid_argument("wt_cascade: spatial dims must divide 2^levels");
  std::vector<WaveletComponents<T>> out;
  Tensor<T> cur = x;
  for (int i = 1; i <= levels; ++i) {
    WaveletComponents<T> comp = wt(cur, bank);
    comp.level = i;
    cur = comp.ll;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace scf
