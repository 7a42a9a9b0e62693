// Copyright 2026 mbf authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mbf {

using cdouble = std::complex<double>;

// Dense row-major rank-2 tensor.
template <class T>
struct Tensor2 {
  int d0 = 0, d1 = 0;
  std::vector<T> v;

  Tensor2() = default;
  Tensor2(int n0, int n1, T fill = T{}) : d0(n0), d1(n1), v(size_t(n0) * n1, fill) {
    if (n0 < 0 || n1 < 0) throw std::invalid_argument("Tensor2: negative extent");
  }

  T& operator()(int i, int j) { return v[size_t(i) * d1 + j]; }
  const T& operator()(int i, int j) const { return v[size_t(i) * d1 + j]; }

  size_t size() const { return v.size(); }
  bool same_shape(const Tensor2& o) const { return d0 == o.d0 && d1 == o.d1; }
};

// Dense row-major rank-3 tensor (innermost index fastest).
template <class T>
struct Tensor3 {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<T> v;

  Tensor3() = default;
  Tensor3(int n0, int n1, int n2, T fill = T{})
      : d0(n0), d1(n1), d2(n2), v(size_t(n0) * n1 * n2, fill) {
    if (n0 < 0 || n1 < 0 || n2 < 0) throw std::invalid_argument("Tensor3: negative extent");
  }

  T& operator()(int i, int j, int k) { return v[(size_t(i) * d1 + j) * d2 + k]; }
  const T& operator()(int i, int j, int k) const { return v[(size_t(i) * d1 + j) * d2 + k]; }

  size_t size() const { return v.size(); }
  bool same_shape(const Tensor3& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2; }
};

}  // namespace mbf
