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

#ifndef GAQEC_ERROR_BASIS_HPP
#define GAQEC_ERROR_BASIS_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gaqec/check_report.hpp"

namespace gaqec {

using Complex = std::complex<double>;
using SiteMatrix = Eigen::MatrixXcd;

// Position of a group element inside a GroupOrdering. All dense arrays in the
// library (phase tables, kernels, algebra coefficients) are indexed by symbols.
using Symbol = std::uint32_t;

// Absolute tolerance for unit-phase, identity and equality checks.
inline constexpr double kTolerance = 1e-9;

// Element (a, b) of Z_m x Z_m; indexes the operator X^a Z^b.
struct GroupElement {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement add(GroupElement g, GroupElement h, unsigned m) noexcept;
GroupElement negate(GroupElement g, unsigned m) noexcept;

// A fixed enumeration alpha_0 = 0, alpha_1, ..., alpha_{m^2-1} of Z_m x Z_m.
//
// For odd m the Lee ordering lists the lexicographically smaller member of each
// {g, -g} pair first, so that alpha_{m^2-i} = -alpha_i for 1 <= i <= delta.
// lee_delta() is set whenever the ordering satisfies that pairing.
class GroupOrdering {
 public:
  enum class Kind { RowMajor, Lee, Custom };

  static GroupOrdering row_major(unsigned m);
  static GroupOrdering lee(unsigned m);
  // Lee for odd m, row-major for even m.
  static GroupOrdering standard(unsigned m);
  static GroupOrdering from_elements(unsigned m, std::vector<GroupElement> order);
  // Accepts "row-major", "lee" and "standard".
  static GroupOrdering by_name(unsigned m, std::string_view name);

  unsigned m() const noexcept { return m_; }
  std::size_t size() const noexcept { return order_.size(); }
  Kind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  GroupElement operator[](Symbol position) const { return order_.at(position); }
  Symbol position(GroupElement g) const;
  std::span<const GroupElement> elements() const noexcept { return order_; }
  std::optional<std::size_t> lee_delta() const noexcept { return lee_delta_; }

 private:
  GroupOrdering(unsigned m, Kind kind, std::vector<GroupElement> order);

  unsigned m_;
  Kind kind_;
  std::vector<GroupElement> order_;
  std::vector<Symbol> position_;  // indexed by a * m + b
  std::optional<std::size_t> lee_delta_;
};

// g = (g_1, ..., g_n) in G^n.
struct ErrorLabel {
  std::vector<GroupElement> coords;

  std::size_t size() const noexcept { return coords.size(); }
  std::size_t weight() const noexcept;

  friend bool operator==(const ErrorLabel&, const ErrorLabel&) = default;
};

ErrorLabel add(const ErrorLabel& g, const ErrorLabel& h, unsigned m);

// Mixed-radix index of a symbol string; coordinate 0 is the most significant digit.
std::size_t encode_symbols(std::span<const Symbol> symbols, std::size_t radix);
void decode_symbols(std::size_t index, std::size_t radix, std::span<Symbol> out);

// A nice error basis with index group Z_m x Z_m: the phase table
// omega(g, h) defined by E_g E_h = omega(g, h) E_{g+h}, the character kernel
// kernel(h, g) = omega(h, g) * conj(omega(g, h)), and the single-site operators.
//
// Immutable after construction.
class PhaseSystem {
 public:
  // Builds the derived tables without validating anything. Use
  // build_pauli_system() or validate_custom_basis() for checked construction.
  static PhaseSystem assemble(GroupOrdering ordering, std::vector<SiteMatrix> site_operators,
                              std::vector<Complex> omega);

  unsigned m() const noexcept { return ordering_.m(); }
  // m^2, the number of symbols per site.
  std::size_t alphabet_size() const noexcept { return ordering_.size(); }
  const GroupOrdering& ordering() const noexcept { return ordering_; }

  Complex omega(Symbol g, Symbol h) const { return omega_[g * alphabet_size() + h]; }
  Complex kernel(Symbol h, Symbol g) const { return kernel_[h * alphabet_size() + g]; }
  // Row-major m^2 x m^2 table, row h.
  std::span<const Complex> kernel_table() const noexcept { return kernel_; }

  Symbol add(Symbol g, Symbol h) const { return add_[g * alphabet_size() + h]; }
  Symbol negate(Symbol g) const { return negate_[g]; }

  const SiteMatrix& site_operator(Symbol g) const { return site_operators_.at(g); }
  std::span<const SiteMatrix> site_operators() const noexcept { return site_operators_; }

  std::vector<Symbol> symbols_of(const ErrorLabel& label) const;
  ErrorLabel label_of(std::span<const Symbol> symbols) const;
  std::size_t index_of(const ErrorLabel& label) const;
  ErrorLabel label_at(std::size_t index, std::size_t n) const;

 private:
  PhaseSystem(GroupOrdering ordering, std::vector<SiteMatrix> site_operators,
              std::vector<Complex> omega);

  GroupOrdering ordering_;
  std::vector<SiteMatrix> site_operators_;
  std::vector<Complex> omega_;
  std::vector<Complex> kernel_;
  std::vector<Symbol> add_;
  std::vector<Symbol> negate_;
};

// e^{2 pi i k / m}, exact at multiples of a quarter turn.
Complex root_of_unity(long long k, unsigned m);

// Generalized Pauli basis E_(a,b) = X^a Z^b with X|j> = |j+1>, Z|j> = w^j |j>.
PhaseSystem build_pauli_system(unsigned m);
PhaseSystem build_pauli_system(unsigned m, GroupOrdering ordering);

Complex character(const PhaseSystem& sys, GroupElement h, GroupElement g);
// Product of per-site characters.
Complex character(const PhaseSystem& sys, const ErrorLabel& h, const ErrorLabel& g);

// For every nonzero h, |sum_g omega(g, h) conj(omega(h, g))| must vanish.
CheckReport verify_lemma1(const PhaseSystem& sys);

// Checks a user-supplied basis (matrices listed in ordering order) against the
// nice-error-basis axioms and extracts its phase table. Throws Error with
// IdentityViolation, NonUnitary, TraceViolation, ClosureViolation or
// Lemma1Violation.
PhaseSystem validate_custom_basis(std::span<const SiteMatrix> matrices, GroupOrdering ordering);

}  // namespace gaqec

#endif  // GAQEC_ERROR_BASIS_HPP
