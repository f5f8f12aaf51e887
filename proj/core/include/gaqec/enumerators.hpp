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

#ifndef GAQEC_ENUMERATORS_HPP
#define GAQEC_ENUMERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gaqec/check_report.hpp"
#include "gaqec/error_basis.hpp"
#include "gaqec/group_algebra.hpp"

namespace gaqec {

// (s_0, ..., s_{m^2-1}): how many coordinates equal each alpha_i. Sums to n.
using Composition = std::vector<std::uint32_t>;
// (l_0, ..., l_delta) with l_i = s_i + s_{m^2-i}. Only for odd m.
using LeeKey = std::vector<std::uint32_t>;

Composition composition(const PhaseSystem& sys, const ErrorLabel& label);
Composition composition_of(std::span<const Symbol> symbols, std::size_t alphabet_size);
LeeKey lee_composition(const PhaseSystem& sys, const ErrorLabel& label);
LeeKey lee_key_of(const Composition& counts, std::size_t delta);

struct CompleteDistribution {
  std::size_t alphabet_size = 0;
  std::size_t n = 0;
  std::map<Composition, Complex> terms;

  Complex total() const;
  // W(z_0, ..., z_{m^2-1}); z.size() must equal alphabet_size.
  Complex evaluate(std::span<const Complex> z) const;
};

struct LeeDistribution {
  std::size_t delta = 0;
  std::size_t n = 0;
  std::map<LeeKey, Complex> terms;

  Complex total() const;
  // L(z_0, ..., z_delta).
  Complex evaluate(std::span<const Complex> z) const;
};

struct HammingDistribution {
  // A_0, ..., A_n.
  std::vector<Complex> coefficients;

  std::size_t n() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  Complex total() const;
  // W(x, y) = sum_i A_i x^(n-i) y^i.
  Complex evaluate(Complex x, Complex y) const;
  bool is_real_nonnegative(double tolerance = kTolerance) const;
};

// Rounds every coefficient to the nearest integer if all of them are real and
// within `tolerance` of one; `max_residual` receives the largest rounding gap.
std::optional<std::vector<long long>> integer_coefficients(const HammingDistribution& dist,
                                                           double tolerance = 1e-6,
                                                           double* max_residual = nullptr);

CompleteDistribution complete_distribution(const AlgebraElement& element);
// Throws EvenM for even m; InvalidArgument if the ordering lacks the +/- pairing.
LeeDistribution lee_distribution(const PhaseSystem& sys, const AlgebraElement& element);
HammingDistribution hamming_distribution(const AlgebraElement& element);

// Specializations of the complete distribution: merge each +/- pair, or set
// z_0 = x and every other variable to y.
LeeDistribution merge_to_lee(const PhaseSystem& sys, const CompleteDistribution& complete);
HammingDistribution merge_to_hamming(const CompleteDistribution& complete);

// The exact enumerator sum_g c_g prod_i z_{i, g_i}. `variables` is row-major
// n x m^2 with row i holding z_{i, 0..m^2-1}.
Complex evaluate_exact_enumerator(const AlgebraElement& element, std::span<const Complex> variables);

struct IdentityTestOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 20260101;
  double tolerance = kTolerance;
};

// MacWilliams-type identities between the enumerators of C and its transform.
// The exact, complete and Lee versions are checked by evaluating both sides at
// random points of the unit disk; the Hamming version is compared coefficient
// by coefficient against the binomial expansion of
// (1/M) W_C(x + (m^2 - 1) y, x - y).
CheckReport verify_exact_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                  const IdentityTestOptions& options = {});
CheckReport verify_complete_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                     const IdentityTestOptions& options = {});
CheckReport verify_lee_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                const IdentityTestOptions& options = {});
CheckReport verify_hamming_identity(const PhaseSystem& sys, const AlgebraElement& element,
                                    double tolerance = kTolerance);

// Coefficients (in powers of y) of (1/M) W_C(x + (m^2 - 1) y, x - y).
std::vector<Complex> hamming_dual_expansion(const HammingDistribution& primary, Complex mass,
                                            std::size_t alphabet_size);

// Substituted variables used by the identities: w_r = sum_s kernel(s, r) z_s.
std::vector<Complex> complete_substitution(const PhaseSystem& sys, std::span<const Complex> z);
// w_i = z_0 + sum_{s=1..delta} (kernel(s, i) + conj(kernel(s, i))) z_s.
std::vector<Complex> lee_substitution(const PhaseSystem& sys, std::span<const Complex> z);

}  // namespace gaqec

#endif  // GAQEC_ENUMERATORS_HPP
