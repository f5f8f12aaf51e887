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

#include "gaqec/enumerators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "complex_ops.hpp"
#include "gaqec/errors.hpp"

namespace gaqec {
namespace {

std::size_t require_lee_delta(const GroupOrdering& ordering) {
  if (ordering.m() % 2 == 0) {
    throw Error(ErrorKind::EvenM, "Lee enumerators need m^2 odd; m=" + std::to_string(ordering.m()) + " is even");
  }
  const auto delta = ordering.lee_delta();
  if (!delta) {
    throw Error(ErrorKind::InvalidArgument, "ordering '" + std::string(ordering.name()) +
                                                "' does not pair alpha_{m^2-i} with -alpha_i");
  }
  return *delta;
}

// Powers z^0 .. z^n of each variable, row-major.
std::vector<Complex> power_table(std::span<const Complex> z, std::size_t n) {
  std::vector<Complex> powers(z.size() * (n + 1));
  for (std::size_t v = 0; v < z.size(); ++v) {
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k <= n; ++k) {
      powers[v * (n + 1) + k] = p;
      p *= z[v];
    }
  }
  return powers;
}

template <typename Key>
Complex evaluate_monomials(const std::map<Key, Complex>& terms, std::span<const Complex> z, std::size_t n) {
  const auto powers = power_table(z, n);
  Complex total{};
  for (const auto& [key, coeff] : terms) {
    Complex term = coeff;
    for (std::size_t v = 0; v < key.size(); ++v) term *= powers[v * (n + 1) + key[v]];
    total += term;
  }
  return total;
}

Complex random_disk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = std::sqrt(unit(rng));
  const double angle = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(radius, angle);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

double relative_gap(Complex lhs, Complex rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

void record_trial(CheckReport& report, std::size_t trial, Complex lhs, Complex rhs) {
  const double residual = relative_gap(lhs, rhs);
  report.observe(residual);
  if (residual > report.tolerance) {
    report.fail("trial " + std::to_string(trial) + ": relative residual " + std::to_string(residual));
  }
}

}  // namespace

Composition composition_of(std::span<const Symbol> symbols, std::size_t alphabet_size) {
  Composition counts(alphabet_size, 0);
  for (Symbol s : symbols) ++counts.at(s);
  return counts;
}

Composition composition(const PhaseSystem& sys, const ErrorLabel& label) {
  const auto symbols = sys.symbols_of(label);
  return composition_of(symbols, sys.alphabet_size());
}

LeeKey lee_key_of(const Composition& counts, std::size_t delta) {
  const std::size_t q = counts.size();
  LeeKey key(delta + 1, 0);
  key[0] = counts[0];
  for (std::size_t i = 1; i <= delta; ++i) key[i] = counts[i] + counts[q - i];
  return key;
}

LeeKey lee_composition(const PhaseSystem& sys, const ErrorLabel& label) {
  const std::size_t delta = require_lee_delta(sys.ordering());
  return lee_key_of(composition(sys, label), delta);
}

Complex CompleteDistribution::total() const {
  Complex sum{};
  for (const auto& [key, coeff] : terms) sum += coeff;
  return sum;
}

Complex CompleteDistribution::evaluate(std::span<const Complex> z) const {
  if (z.size() != alphabet_size) {
    throw Error(ErrorKind::ShapeMismatch, "complete enumerator takes " + std::to_string(alphabet_size) + " variables");
  }
  return evaluate_monomials(terms, z, n);
}

Complex LeeDistribution::total() const {
  Complex sum{};
  for (const auto& [key, coeff] : terms) sum += coeff;
  return sum;
}

Complex LeeDistribution::evaluate(std::span<const Complex> z) const {
  if (z.size() != delta + 1) {
    throw Error(ErrorKind::ShapeMismatch, "Lee enumerator takes " + std::to_string(delta + 1) + " variables");
  }
  return evaluate_monomials(terms, z, n);
}

Complex HammingDistribution::total() const {
  Complex sum{};
  for (const auto& a : coefficients) sum += a;
  return sum;
}

Complex HammingDistribution::evaluate(Complex x, Complex y) const {
  const std::size_t len = n();
  Complex total{};
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    total += coefficients[i] * std::pow(x, static_cast<int>(len - i)) * std::pow(y, static_cast<int>(i));
  }
  return total;
}

bool HammingDistribution::is_real_nonnegative(double tolerance) const {
  return std::all_of(coefficients.begin(), coefficients.end(), [tolerance](Complex a) {
    return std::abs(a.imag()) <= tolerance && a.real() >= -tolerance;
  });
}

std::optional<std::vector<long long>> integer_coefficients(const HammingDistribution& dist, double tolerance,
                                                           double* max_residual) {
  std::vector<long long> out;
  out.reserve(dist.coefficients.size());
  double worst = 0.0;
  for (const auto& a : dist.coefficients) {
    const double nearest = std::round(a.real());
    const double gap = std::max(std::abs(a.real() - nearest), std::abs(a.imag()));
    worst = std::max(worst, gap);
    out.push_back(static_cast<long long>(nearest));
  }
  if (max_residual != nullptr) *max_residual = worst;
  if (worst > tolerance) return std::nullopt;
  return out;
}

CompleteDistribution complete_distribution(const AlgebraElement& element) {
  CompleteDistribution dist{.alphabet_size = element.alphabet_size(), .n = element.n(), .terms = {}};
  std::vector<Symbol> symbols(element.n());
  for (std::size_t index = 0; index < element.size(); ++index) {
    if (element[index] == Complex{}) continue;
    decode_symbols(index, dist.alphabet_size, symbols);
    dist.terms[composition_of(symbols, dist.alphabet_size)] += element[index];
  }
  return dist;
}

LeeDistribution merge_to_lee(const PhaseSystem& sys, const CompleteDistribution& complete) {
  const std::size_t delta = require_lee_delta(sys.ordering());
  if (complete.alphabet_size != sys.alphabet_size()) {
    throw Error(ErrorKind::ShapeMismatch, "distribution and phase system disagree on m");
  }
  LeeDistribution lee{.delta = delta, .n = complete.n, .terms = {}};
  for (const auto& [counts, coeff] : complete.terms) lee.terms[lee_key_of(counts, delta)] += coeff;
  return lee;
}

LeeDistribution lee_distribution(const PhaseSystem& sys, const AlgebraElement& element) {
  if (sys.m() != element.m()) {
    throw Error(ErrorKind::ShapeMismatch, "element and phase system disagree on m");
  }
  require_lee_delta(sys.ordering());
  return merge_to_lee(sys, complete_distribution(element));
}

HammingDistribution merge_to_hamming(const CompleteDistribution& complete) {
  HammingDistribution dist{std::vector<Complex>(complete.n + 1)};
  for (const auto& [counts, coeff] : complete.terms) dist.coefficients[complete.n - counts[0]] += coeff;
  return dist;
}

HammingDistribution hamming_distribution(const AlgebraElement& element) {
  const std::size_t n = element.n();
  const std::size_t q = element.alphabet_size();
  HammingDistribution dist{std::vector<Complex>(n + 1)};
  for (std::size_t index = 0; index < element.size(); ++index) {
    std::size_t rest = index;
    std::size_t weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
      weight += (rest % q) != 0;
      rest /= q;
    }
    dist.coefficients[weight] += element[index];
  }
  return dist;
}

Complex evaluate_exact_enumerator(const AlgebraElement& element, std::span<const Complex> variables) {
  const std::size_t n = element.n();
  const std::size_t q = element.alphabet_size();
  if (variables.size() != n * q) {
    throw Error(ErrorKind::ShapeMismatch, "exact enumerator takes n*m^2 = " + std::to_string(n * q) + " variables");
  }
  // Contract the least significant axis (coordinate n-1) first.
  std::vector<Complex> data(element.coeffs().begin(), element.coeffs().end());
  for (std::size_t axis = n; axis-- > 0;) {
    const std::size_t outer = data.size() / q;
    const Complex* z = variables.data() + axis * q;
    for (std::size_t j = 0; j < outer; ++j) {
      Complex acc{};
      for (std::size_t s = 0; s < q; ++s) detail::fma_complex(acc, data[j * q + s], z[s]);
      data[j] = acc;
    }
    data.resize(outer);
  }
  return data.front();
}

std::vector<Complex> complete_substitution(const PhaseSystem& sys, std::span<const Complex> z) {
  const std::size_t q = sys.alphabet_size();
  std::vector<Complex> w(q);
  for (Symbol r = 0; r < q; ++r) {
    Complex acc{};
    for (Symbol s = 0; s < q; ++s) acc += sys.kernel(s, r) * z[s];
    w[r] = acc;
  }
  return w;
}

std::vector<Complex> lee_substitution(const PhaseSystem& sys, std::span<const Complex> z) {
  const std::size_t delta = require_lee_delta(sys.ordering());
  std::vector<Complex> w(delta + 1);
  for (Symbol i = 0; i <= delta; ++i) {
    Complex acc = z[0];
    for (Symbol s = 1; s <= delta; ++s) {
      const Complex k = sys.kernel(s, i);
      acc += (k + std::conj(k)) * z[s];
    }
    w[i] = acc;
  }
  return w;
}

CheckReport verify_exact_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                  const IdentityTestOptions& options) {
  auto report = CheckReport::start("t4", options.tolerance);
  const auto dual = transform(sys, element);
  const std::size_t n = element.n();
  const std::size_t q = element.alphabet_size();
  std::vector<Complex> z(n * q);
  std::vector<Complex> w(n * q);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    auto rng = trial_rng(options.seed, trial);
    for (auto& v : z) v = random_disk_point(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = complete_substitution(sys, std::span<const Complex>(z.data() + i * q, q));
      std::copy(row.begin(), row.end(), w.begin() + static_cast<std::ptrdiff_t>(i * q));
    }
    const Complex lhs = evaluate_exact_enumerator(dual.element, z);
    const Complex rhs = evaluate_exact_enumerator(element, w) / dual.source_mass;
    record_trial(report, trial, lhs, rhs);
  }
  return report;
}

CheckReport verify_complete_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                     const IdentityTestOptions& options) {
  auto report = CheckReport::start("t6", options.tolerance);
  const auto dual = transform(sys, element);
  const auto primary_dist = complete_distribution(element);
  const auto dual_dist = complete_distribution(dual.element);
  std::vector<Complex> z(element.alphabet_size());
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    auto rng = trial_rng(options.seed, trial);
    for (auto& v : z) v = random_disk_point(rng);
    const Complex lhs = dual_dist.evaluate(z);
    const Complex rhs = primary_dist.evaluate(complete_substitution(sys, z)) / dual.source_mass;
    record_trial(report, trial, lhs, rhs);
  }
  return report;
}

CheckReport verify_lee_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                const IdentityTestOptions& options) {
  auto report = CheckReport::start("t8", options.tolerance);
  const std::size_t delta = require_lee_delta(sys.ordering());
  const auto dual = transform(sys, element);
  const auto primary_dist = lee_distribution(sys, element);
  const auto dual_dist = lee_distribution(sys, dual.element);
  std::vector<Complex> z(delta + 1);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    auto rng = trial_rng(options.seed, trial);
    for (auto& v : z) v = random_disk_point(rng);
    const Complex lhs = dual_dist.evaluate(z);
    const Complex rhs = primary_dist.evaluate(lee_substitution(sys, z)) / dual.source_mass;
    record_trial(report, trial, lhs, rhs);
  }
  return report;
}

std::vector<Complex> hamming_dual_expansion(const HammingDistribution& primary, Complex mass,
                                            std::size_t alphabet_size) {
  const std::size_t n = primary.n();
  const double spread = static_cast<double>(alphabet_size) - 1.0;
  std::vector<Complex> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    // (1 + spread*y)^(n-i) * (1 - y)^i as a polynomial in y.
    std::vector<double> poly{1.0};
    const auto multiply_linear = [&poly](double slope) {
      poly.push_back(0.0);
      for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] += slope * poly[j - 1];
    };
    for (std::size_t k = 0; k < n - i; ++k) multiply_linear(spread);
    for (std::size_t k = 0; k < i; ++k) multiply_linear(-1.0);
    for (std::size_t j = 0; j <= n; ++j) out[j] += primary.coefficients[i] * poly[j];
  }
  for (auto& c : out) c /= mass;
  return out;
}

CheckReport verify_hamming_identity(const PhaseSystem& sys, const AlgebraElement& element, double tolerance) {
  auto report = CheckReport::start("t9", tolerance);
  const auto dual = transform(sys, element);
  const auto observed = hamming_distribution(dual.element);
  const auto expected =
      hamming_dual_expansion(hamming_distribution(element), dual.source_mass, element.alphabet_size());
  for (std::size_t j = 0; j < expected.size(); ++j) {
    const double residual =
        std::abs(observed.coefficients[j] - expected[j]) / std::max(1.0, std::abs(expected[j]));
    report.observe(residual);
    if (residual > tolerance) {
      report.fail("A'_" + std::to_string(j) + " differs from the expansion by " + std::to_string(residual));
    }
  }
  return report;
}

}  // namespace gaqec
