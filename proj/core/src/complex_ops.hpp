// Copyright 2026 The gaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAQEC_SRC_COMPLEX_OPS_HPP
#define GAQEC_SRC_COMPLEX_OPS_HPP

#include <complex>

namespace gaqec::detail {

// acc += a * b without the NaN/Inf recovery path of operator*.
inline void fma_complex(std::complex<double>& acc, std::complex<double> a, std::complex<double> b) {
  acc = {acc.real() + a.real() * b.real() - a.imag() * b.imag(),
         acc.imag() + a.real() * b.imag() + a.imag() * b.real()};
}

inline std::complex<double> mul_complex(std::complex<double> a, std::complex<double> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace gaqec::detail

#endif  // GAQEC_SRC_COMPLEX_OPS_HPP
