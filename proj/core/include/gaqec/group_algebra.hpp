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

#ifndef GAQEC_GROUP_ALGEBRA_HPP
#define GAQEC_GROUP_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gaqec/check_report.hpp"
#include "gaqec/error_basis.hpp"

namespace gaqec {

// Mass below this magnitude is treated as zero.
inline constexpr double kMassThreshold = 1e-12;

// C = sum_g c_g z^g over G^n, stored densely: m^(2n) coefficients indexed by
// the mixed-radix symbol string of g (see encode_symbols()).
class AlgebraElement {
 public:
  AlgebraElement(unsigned m, std::size_t n);
  AlgebraElement(unsigned m, std::size_t n, std::vector<Complex> coeffs);

  // z^g for the label at `index`, scaled by `value`.
  static AlgebraElement monomial(unsigned m, std::size_t n, std::size_t index, Complex value = 1.0);
  // sum over all g of z^g.
  static AlgebraElement full_sum(unsigned m, std::size_t n);

  unsigned m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t alphabet_size() const noexcept { return std::size_t{m_} * m_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t index) const { return coeffs_[index]; }
  // Cached sum of all coefficients.
  Complex mass() const noexcept { return mass_; }

 private:
  unsigned m_;
  std::size_t n_;
  std::vector<Complex> coeffs_;
  Complex mass_;
};

// m^(2n), with overflow and size checks.
std::size_t element_size(unsigned m, std::size_t n);

AlgebraElement add(const AlgebraElement& lhs, const AlgebraElement& rhs);
AlgebraElement scale(Complex r, const AlgebraElement& element);
// Group convolution: out[g + h] += a_g b_h.
AlgebraElement multiply(const PhaseSystem& sys, const AlgebraElement& lhs, const AlgebraElement& rhs);

struct TransformResult {
  AlgebraElement element;
  Complex source_mass;
};

struct TransformOptions {
  // Worker threads for the axis passes; results do not depend on this.
  unsigned threads = 1;
};

// c'_h = (1/M) sum_g c_g prod_i kernel(h_i, g_i), computed by applying the
// m^2 x m^2 kernel along each of the n axes. Throws ZeroMass when |M| <= 1e-12.
TransformResult transform(const PhaseSystem& sys, const AlgebraElement& element,
                          const TransformOptions& options = {});

// Same contract as transform(), by direct double summation. O(m^(4n)).
TransformResult transform_naive(const PhaseSystem& sys, const AlgebraElement& element);

// chi_h(C) for every h, without the 1/M normalization. Linear in C and
// defined for zero-mass elements.
AlgebraElement character_sums(const PhaseSystem& sys, const AlgebraElement& element,
                              const TransformOptions& options = {});

// Applying the transform twice returns (m^(2n) / (M M')) C.
CheckReport double_transform_scaling_check(const PhaseSystem& sys, const AlgebraElement& element);

}  // namespace gaqec

#endif  // GAQEC_GROUP_ALGEBRA_HPP
