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

#include "gaqec/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "complex_ops.hpp"
#include "gaqec/errors.hpp"
#include "parallel.hpp"

namespace gaqec {
namespace {

// 2^26 coefficients is 1 GiB of complex<double>.
constexpr std::size_t kMaxElementSize = std::size_t{1} << 26;

Complex sum_in_order(std::span<const Complex> values) {
  Complex total{};
  for (const auto& v : values) total += v;
  return total;
}

void require_same_shape(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  if (lhs.m() != rhs.m() || lhs.n() != rhs.n()) {
    throw Error(ErrorKind::ShapeMismatch, "elements have shapes (m=" + std::to_string(lhs.m()) +
                                              ", n=" + std::to_string(lhs.n()) + ") and (m=" +
                                              std::to_string(rhs.m()) + ", n=" + std::to_string(rhs.n()) + ")");
  }
}

void require_system(const PhaseSystem& sys, const AlgebraElement& element) {
  if (sys.m() != element.m()) {
    throw Error(ErrorKind::ShapeMismatch, "element has m=" + std::to_string(element.m()) +
                                              " but the phase system has m=" + std::to_string(sys.m()));
  }
}

// All labels as symbol strings, row per index.
std::vector<Symbol> symbol_table(std::size_t q, std::size_t n, std::size_t count) {
  std::vector<Symbol> table(count * n);
  for (std::size_t index = 0; index < count; ++index) {
    decode_symbols(index, q, std::span<Symbol>(table.data() + index * n, n));
  }
  return table;
}

Complex require_mass(const AlgebraElement& element) {
  const Complex mass = element.mass();
  if (std::abs(mass) <= kMassThreshold) {
    throw Error(ErrorKind::ZeroMass, "element mass " + std::to_string(std::abs(mass)) +
                                         " is not distinguishable from zero");
  }
  return mass;
}

}  // namespace

std::size_t element_size(unsigned m, std::size_t n) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "level count m must be at least 2");
  const std::size_t q = std::size_t{m} * m;
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > kMaxElementSize / q) {
      throw Error(ErrorKind::SizeCap, "m^(2n) for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                          " exceeds the dense storage limit of " +
                                          std::to_string(kMaxElementSize) + " coefficients");
    }
    size *= q;
  }
  return size;
}

AlgebraElement::AlgebraElement(unsigned m, std::size_t n)
    : m_(m), n_(n), coeffs_(element_size(m, n)), mass_{} {}

AlgebraElement::AlgebraElement(unsigned m, std::size_t n, std::vector<Complex> coeffs)
    : m_(m), n_(n), coeffs_(std::move(coeffs)) {
  const std::size_t expected = element_size(m, n);
  if (coeffs_.size() != expected) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(expected) + " coefficients, got " +
                                              std::to_string(coeffs_.size()));
  }
  mass_ = sum_in_order(coeffs_);
}

AlgebraElement AlgebraElement::monomial(unsigned m, std::size_t n, std::size_t index, Complex value) {
  std::vector<Complex> coeffs(element_size(m, n));
  if (index >= coeffs.size()) {
    throw Error(ErrorKind::InvalidArgument, "label index " + std::to_string(index) + " out of range");
  }
  coeffs[index] = value;
  return AlgebraElement(m, n, std::move(coeffs));
}

AlgebraElement AlgebraElement::full_sum(unsigned m, std::size_t n) {
  return AlgebraElement(m, n, std::vector<Complex>(element_size(m, n), Complex{1.0, 0.0}));
}

AlgebraElement add(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  require_same_shape(lhs, rhs);
  std::vector<Complex> out(lhs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] + rhs[i];
  return AlgebraElement(lhs.m(), lhs.n(), std::move(out));
}

AlgebraElement scale(Complex r, const AlgebraElement& element) {
  std::vector<Complex> out(element.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r * element[i];
  return AlgebraElement(element.m(), element.n(), std::move(out));
}

AlgebraElement multiply(const PhaseSystem& sys, const AlgebraElement& lhs, const AlgebraElement& rhs) {
  require_same_shape(lhs, rhs);
  require_system(sys, lhs);
  const std::size_t q = lhs.alphabet_size();
  const std::size_t n = lhs.n();
  const std::size_t count = lhs.size();
  const auto digits = symbol_table(q, n, count);
  std::vector<Complex> out(count);
  for (std::size_t g = 0; g < count; ++g) {
    if (lhs[g] == Complex{}) continue;
    const Symbol* gd = digits.data() + g * n;
    for (std::size_t h = 0; h < count; ++h) {
      if (rhs[h] == Complex{}) continue;
      const Symbol* hd = digits.data() + h * n;
      std::size_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum = sum * q + sys.add(gd[i], hd[i]);
      out[sum] += lhs[g] * rhs[h];
    }
  }
  return AlgebraElement(lhs.m(), n, std::move(out));
}

AlgebraElement character_sums(const PhaseSystem& sys, const AlgebraElement& element,
                              const TransformOptions& options) {
  require_system(sys, element);
  const std::size_t q = element.alphabet_size();
  const std::size_t n = element.n();
  const auto kernel = sys.kernel_table();
  std::vector<Complex> data(element.coeffs().begin(), element.coeffs().end());
  std::vector<Complex> next(data.size());

  // Axis k has stride q^(n-1-k). Every output row (block, h) is written by
  // one worker with a fixed summation order over the kernel column.
  std::size_t stride = data.size();
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= q;
    const std::size_t rows = data.size() / stride;
    detail::parallel_for(rows, options.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t row = begin; row < end; ++row) {
        const std::size_t block = row / q;
        const std::size_t h = row % q;
        Complex* out = next.data() + row * stride;
        const Complex* in = data.data() + block * q * stride;
        std::fill(out, out + stride, Complex{});
        for (std::size_t r = 0; r < q; ++r) {
          const Complex w = kernel[h * q + r];
          const Complex* column = in + r * stride;
          for (std::size_t t = 0; t < stride; ++t) detail::fma_complex(out[t], w, column[t]);
        }
      }
    });
    std::swap(data, next);
  }
  return AlgebraElement(element.m(), n, std::move(data));
}

TransformResult transform(const PhaseSystem& sys, const AlgebraElement& element, const TransformOptions& options) {
  const Complex mass = require_mass(element);
  auto sums = character_sums(sys, element, options);
  return {scale(1.0 / mass, sums), mass};
}

TransformResult transform_naive(const PhaseSystem& sys, const AlgebraElement& element) {
  require_system(sys, element);
  const Complex mass = require_mass(element);
  const std::size_t q = element.alphabet_size();
  const std::size_t n = element.n();
  const std::size_t count = element.size();
  const auto digits = symbol_table(q, n, count);
  std::vector<Complex> out(count);
  for (std::size_t h = 0; h < count; ++h) {
    const Symbol* hd = digits.data() + h * n;
    Complex acc{};
    for (std::size_t g = 0; g < count; ++g) {
      const Symbol* gd = digits.data() + g * n;
      Complex chi{1.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) chi *= sys.kernel(hd[i], gd[i]);
      acc += element[g] * chi;
    }
    out[h] = acc / mass;
  }
  return {AlgebraElement(element.m(), n, std::move(out)), mass};
}

CheckReport double_transform_scaling_check(const PhaseSystem& sys, const AlgebraElement& element) {
  auto report = CheckReport::start("double", kTolerance);
  const auto once = transform(sys, element);
  const auto twice = transform(sys, once.element);
  const double count = static_cast<double>(element.size());
  const Complex factor = count / (once.source_mass * twice.source_mass);
  for (std::size_t g = 0; g < element.size(); ++g) {
    const Complex expected = factor * element[g];
    const double residual = std::abs(twice.element[g] - expected) / std::max(1.0, std::abs(expected));
    report.observe(residual);
    if (residual > kTolerance && report.violations.size() < 8) {
      report.fail("coefficient " + std::to_string(g) + " differs by " + std::to_string(residual));
    }
  }
  return report;
}

}  // namespace gaqec
