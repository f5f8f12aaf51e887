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

#ifndef GAQEC_CODE_ANALYSIS_HPP
#define GAQEC_CODE_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "gaqec/check_report.hpp"
#include "gaqec/enumerators.hpp"
#include "gaqec/error_basis.hpp"
#include "gaqec/group_algebra.hpp"

namespace gaqec {

// The operator e^{i pi phase / m} E_label. Only the label enters the
// associated element; the phase matters when codewords are materialized.
struct StabilizerGenerator {
  ErrorLabel label;
  int phase = 0;
};

// K orthonormal vectors of dimension m^n, site 0 most significant.
struct BasisVectors {
  std::vector<std::vector<Complex>> vectors;
};

struct StabilizerGenerators {
  std::vector<StabilizerGenerator> generators;
};

struct CodeSpec {
  unsigned m = 2;
  std::size_t n = 0;
  std::variant<BasisVectors, StabilizerGenerators> body;

  bool is_stabilizer() const noexcept { return std::holds_alternative<StabilizerGenerators>(body); }
};

// Throws NonOrthonormalBasis, NonCommutingGenerators or InvalidArgument.
void validate_code(const PhaseSystem& sys, const CodeSpec& code);

// E_label |state>, applied one tensor factor at a time.
std::vector<Complex> apply_error(const PhaseSystem& sys, const ErrorLabel& label, std::span<const Complex> state);

struct AnalysisOptions {
  unsigned threads = 1;
  // Largest stabilizer group the closure may build; 0 means m^(2n).
  std::size_t closure_cap = 0;
};

// Indicator of the group generated by the labels, built breadth-first.
AlgebraElement stabilizer_indicator(const PhaseSystem& sys, const CodeSpec& code,
                                    const AnalysisOptions& options = {});

// c_g = (1/K^2) |sum_i <v_i|E_g|v_i>|^2, or the stabilizer indicator.
AlgebraElement associated_element(const PhaseSystem& sys, const CodeSpec& code,
                                  const AnalysisOptions& options = {});

// c'_h = (1/K) sum_{i,j} |<v_i|E_h|v_j>|^2 from the basis vectors, or the
// transform of the stabilizer indicator.
AlgebraElement dual_element(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options = {});

struct CodeElements {
  AlgebraElement primary;
  AlgebraElement dual;
};

// Both elements; the basis route computes them in a single sweep over G^n.
CodeElements code_elements(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options = {});

struct AnalysisReport {
  std::size_t dimension = 0;  // K
  std::size_t distance = 0;   // d
  bool pure = false;
  Complex mass;
  HammingDistribution primary_distribution;
  HammingDistribution dual_distribution;
};

// Reads K, d and purity off a code's element and its transform. Throws
// NonIntegerDimension or NoDistance.
AnalysisReport analyze_elements(const AlgebraElement& primary, const AlgebraElement& dual);
AnalysisReport analyze(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options = {});

// c_g <= c'_g + 1e-9 for every g.
CheckReport check_cs_ordering(const AlgebraElement& primary, const AlgebraElement& dual);
CheckReport check_cs_ordering(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options = {});

// K orthonormal vectors from a seeded complex Gaussian matrix. Deterministic
// per seed; rank-deficient draws are retried with derived seeds.
CodeSpec random_code(unsigned m, std::size_t n, std::size_t dimension, std::uint64_t seed);

}  // namespace gaqec

#endif  // GAQEC_CODE_ANALYSIS_HPP
