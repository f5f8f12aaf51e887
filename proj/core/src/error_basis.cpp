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

#include "gaqec/error_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "gaqec/errors.hpp"

namespace gaqec {
namespace {

std::string describe(GroupElement g) {
  return "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
}

void require_level_count(unsigned m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidArgument, "level count m must be at least 2, got " + std::to_string(m));
  }
}

double max_abs(const SiteMatrix& mat) {
  return mat.size() == 0 ? 0.0 : mat.cwiseAbs().maxCoeff();
}

}  // namespace

GroupElement add(GroupElement g, GroupElement h, unsigned m) noexcept {
  return {(g.a + h.a) % m, (g.b + h.b) % m};
}

GroupElement negate(GroupElement g, unsigned m) noexcept {
  return {(m - g.a) % m, (m - g.b) % m};
}

GroupOrdering::GroupOrdering(unsigned m, Kind kind, std::vector<GroupElement> order)
    : m_(m), kind_(kind), order_(std::move(order)), position_(std::size_t{m} * m, 0) {
  for (Symbol pos = 0; pos < order_.size(); ++pos) {
    position_[order_[pos].a * m_ + order_[pos].b] = pos;
  }
  if (m_ % 2 == 1) {
    const std::size_t q = order_.size();
    const std::size_t delta = (q - 1) / 2;
    bool paired = true;
    for (std::size_t i = 1; i <= delta && paired; ++i) {
      paired = order_[q - i] == negate(order_[i], m_);
    }
    if (paired) lee_delta_ = delta;
  }
}

GroupOrdering GroupOrdering::row_major(unsigned m) {
  require_level_count(m);
  std::vector<GroupElement> order;
  order.reserve(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) order.push_back({a, b});
  }
  return GroupOrdering(m, Kind::RowMajor, std::move(order));
}

GroupOrdering GroupOrdering::lee(unsigned m) {
  require_level_count(m);
  if (m % 2 == 0) {
    throw Error(ErrorKind::EvenM, "Lee ordering needs an odd number of group elements; m=" +
                                      std::to_string(m) + " is even");
  }
  std::vector<GroupElement> smaller;
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const GroupElement g{a, b};
      if (g != GroupElement{} && g < negate(g, m)) smaller.push_back(g);
    }
  }
  std::vector<GroupElement> order{GroupElement{}};
  order.insert(order.end(), smaller.begin(), smaller.end());
  for (auto it = smaller.rbegin(); it != smaller.rend(); ++it) order.push_back(negate(*it, m));
  return GroupOrdering(m, Kind::Lee, std::move(order));
}

GroupOrdering GroupOrdering::standard(unsigned m) {
  require_level_count(m);
  return m % 2 == 1 ? lee(m) : row_major(m);
}

GroupOrdering GroupOrdering::from_elements(unsigned m, std::vector<GroupElement> order) {
  require_level_count(m);
  const std::size_t q = std::size_t{m} * m;
  if (order.size() != q) {
    throw Error(ErrorKind::InvalidArgument, "ordering must list " + std::to_string(q) +
                                                " elements, got " + std::to_string(order.size()));
  }
  if (order.front() != GroupElement{}) {
    throw Error(ErrorKind::InvalidArgument, "ordering must start with the identity (0,0)");
  }
  std::vector<bool> seen(q, false);
  for (const auto& g : order) {
    if (g.a >= m || g.b >= m) {
      throw Error(ErrorKind::InvalidArgument, "element " + describe(g) + " is not in Z_m x Z_m");
    }
    if (seen[g.a * m + g.b]) {
      throw Error(ErrorKind::InvalidArgument, "element " + describe(g) + " listed twice");
    }
    seen[g.a * m + g.b] = true;
  }
  if (order == row_major(m).order_) return row_major(m);
  if (m % 2 == 1 && order == lee(m).order_) return lee(m);
  return GroupOrdering(m, Kind::Custom, std::move(order));
}

GroupOrdering GroupOrdering::by_name(unsigned m, std::string_view name) {
  if (name == "row-major") return row_major(m);
  if (name == "lee") return lee(m);
  if (name == "standard") return standard(m);
  throw Error(ErrorKind::InvalidArgument, "unknown ordering '" + std::string(name) + "'");
}

std::string_view GroupOrdering::name() const noexcept {
  switch (kind_) {
    case Kind::RowMajor: return "row-major";
    case Kind::Lee: return "lee";
    case Kind::Custom: return "custom";
  }
  return "custom";
}

Symbol GroupOrdering::position(GroupElement g) const {
  if (g.a >= m_ || g.b >= m_) {
    throw Error(ErrorKind::InvalidArgument, "element " + describe(g) + " is not in Z_m x Z_m");
  }
  return position_[g.a * m_ + g.b];
}

std::size_t ErrorLabel::weight() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coords.begin(), coords.end(), [](GroupElement g) { return g != GroupElement{}; }));
}

ErrorLabel add(const ErrorLabel& g, const ErrorLabel& h, unsigned m) {
  if (g.size() != h.size()) {
    throw Error(ErrorKind::ShapeMismatch, "labels have different lengths");
  }
  ErrorLabel out;
  out.coords.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out.coords.push_back(add(g.coords[i], h.coords[i], m));
  return out;
}

std::size_t encode_symbols(std::span<const Symbol> symbols, std::size_t radix) {
  std::size_t index = 0;
  for (Symbol s : symbols) index = index * radix + s;
  return index;
}

void decode_symbols(std::size_t index, std::size_t radix, std::span<Symbol> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(index % radix);
    index /= radix;
  }
}

Complex root_of_unity(long long k, unsigned m) {
  const long long mm = m;
  k = ((k % mm) + mm) % mm;
  if ((4 * k) % mm == 0) {
    switch ((4 * k) / mm) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

PhaseSystem::PhaseSystem(GroupOrdering ordering, std::vector<SiteMatrix> site_operators,
                         std::vector<Complex> omega)
    : ordering_(std::move(ordering)),
      site_operators_(std::move(site_operators)),
      omega_(std::move(omega)) {
  const std::size_t q = ordering_.size();
  const unsigned m = ordering_.m();
  if (omega_.size() != q * q) {
    throw Error(ErrorKind::ShapeMismatch, "phase table must have m^4 = " + std::to_string(q * q) +
                                              " entries, got " + std::to_string(omega_.size()));
  }
  if (!site_operators_.empty() && site_operators_.size() != q) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(q) + " site operators, got " +
                                              std::to_string(site_operators_.size()));
  }
  for (const auto& op : site_operators_) {
    if (op.rows() != m || op.cols() != m) {
      throw Error(ErrorKind::ShapeMismatch, "site operators must be m x m");
    }
  }
  kernel_.resize(q * q);
  add_.resize(q * q);
  negate_.resize(q);
  for (Symbol h = 0; h < q; ++h) {
    negate_[h] = ordering_.position(gaqec::negate(ordering_[h], m));
    for (Symbol g = 0; g < q; ++g) {
      kernel_[h * q + g] = omega_[h * q + g] * std::conj(omega_[g * q + h]);
      add_[h * q + g] = ordering_.position(gaqec::add(ordering_[h], ordering_[g], m));
    }
  }
}

PhaseSystem PhaseSystem::assemble(GroupOrdering ordering, std::vector<SiteMatrix> site_operators,
                                  std::vector<Complex> omega) {
  return PhaseSystem(std::move(ordering), std::move(site_operators), std::move(omega));
}

std::vector<Symbol> PhaseSystem::symbols_of(const ErrorLabel& label) const {
  std::vector<Symbol> out;
  out.reserve(label.size());
  for (const auto& g : label.coords) out.push_back(ordering_.position(g));
  return out;
}

ErrorLabel PhaseSystem::label_of(std::span<const Symbol> symbols) const {
  ErrorLabel out;
  out.coords.reserve(symbols.size());
  for (Symbol s : symbols) out.coords.push_back(ordering_[s]);
  return out;
}

std::size_t PhaseSystem::index_of(const ErrorLabel& label) const {
  const auto symbols = symbols_of(label);
  return encode_symbols(symbols, alphabet_size());
}

ErrorLabel PhaseSystem::label_at(std::size_t index, std::size_t n) const {
  std::vector<Symbol> symbols(n);
  decode_symbols(index, alphabet_size(), symbols);
  return label_of(symbols);
}

PhaseSystem build_pauli_system(unsigned m) { return build_pauli_system(m, GroupOrdering::standard(m)); }

PhaseSystem build_pauli_system(unsigned m, GroupOrdering ordering) {
  require_level_count(m);
  if (ordering.m() != m) {
    throw Error(ErrorKind::ShapeMismatch, "ordering is for a different level count");
  }
  const std::size_t q = ordering.size();
  std::vector<SiteMatrix> ops;
  ops.reserve(q);
  for (Symbol s = 0; s < q; ++s) {
    const GroupElement g = ordering[s];
    SiteMatrix op = SiteMatrix::Zero(m, m);
    for (unsigned j = 0; j < m; ++j) {
      op((j + g.a) % m, j) = root_of_unity(static_cast<long long>(g.b) * j, m);
    }
    ops.push_back(std::move(op));
  }
  // Z^b X^c = w^{bc} X^c Z^b, so X^a Z^b X^c Z^d = w^{bc} X^{a+c} Z^{b+d}.
  std::vector<Complex> omega(q * q);
  for (Symbol g = 0; g < q; ++g) {
    for (Symbol h = 0; h < q; ++h) {
      omega[g * q + h] = root_of_unity(static_cast<long long>(ordering[g].b) * ordering[h].a, m);
    }
  }
  return PhaseSystem::assemble(std::move(ordering), std::move(ops), std::move(omega));
}

Complex character(const PhaseSystem& sys, GroupElement h, GroupElement g) {
  const auto& ord = sys.ordering();
  return sys.kernel(ord.position(h), ord.position(g));
}

Complex character(const PhaseSystem& sys, const ErrorLabel& h, const ErrorLabel& g) {
  if (h.size() != g.size()) {
    throw Error(ErrorKind::ShapeMismatch, "labels have different lengths");
  }
  Complex value{1.0, 0.0};
  for (std::size_t i = 0; i < h.size(); ++i) value *= character(sys, h.coords[i], g.coords[i]);
  return value;
}

CheckReport verify_lemma1(const PhaseSystem& sys) {
  auto report = CheckReport::start("lemma1", kTolerance);
  const std::size_t q = sys.alphabet_size();
  for (Symbol h = 1; h < q; ++h) {
    Complex sum{};
    for (Symbol g = 0; g < q; ++g) sum += sys.omega(g, h) * std::conj(sys.omega(h, g));
    const double residual = std::abs(sum);
    report.observe(residual);
    if (residual > kTolerance) {
      report.fail("h=" + describe(sys.ordering()[h]) + " sums to " + std::to_string(residual));
    }
  }
  return report;
}

PhaseSystem validate_custom_basis(std::span<const SiteMatrix> matrices, GroupOrdering ordering) {
  const unsigned m = ordering.m();
  const std::size_t q = ordering.size();
  if (matrices.size() != q) {
    throw Error(ErrorKind::InvalidArgument, "expected m^2 = " + std::to_string(q) + " matrices, got " +
                                                std::to_string(matrices.size()));
  }
  const auto label = [&](Symbol s) { return "E_" + std::to_string(s) + " " + describe(ordering[s]); };
  const SiteMatrix identity = SiteMatrix::Identity(m, m);
  for (Symbol s = 0; s < q; ++s) {
    const auto& e = matrices[s];
    if (e.rows() != m || e.cols() != m) {
      throw Error(ErrorKind::InvalidArgument, label(s) + " is not " + std::to_string(m) + "x" + std::to_string(m));
    }
    if (max_abs(e.adjoint() * e - identity) > kTolerance) {
      throw Error(ErrorKind::NonUnitary, label(s) + " is not unitary");
    }
  }
  if (max_abs(matrices[0] - identity) > kTolerance) {
    throw Error(ErrorKind::IdentityViolation, label(0) + " is not the identity");
  }
  for (Symbol s = 1; s < q; ++s) {
    if (std::abs(matrices[s].trace()) > kTolerance) {
      throw Error(ErrorKind::TraceViolation, label(s) + " has nonzero trace");
    }
  }
  std::vector<Complex> omega(q * q);
  for (Symbol g = 0; g < q; ++g) {
    for (Symbol h = 0; h < q; ++h) {
      const Symbol sum = ordering.position(add(ordering[g], ordering[h], m));
      const SiteMatrix product = matrices[g] * matrices[h];
      const Complex phase = (matrices[sum].adjoint() * product).trace() / static_cast<double>(m);
      if (std::abs(std::abs(phase) - 1.0) > kTolerance ||
          max_abs(product - phase * matrices[sum]) > kTolerance) {
        throw Error(ErrorKind::ClosureViolation,
                    label(g) + " * " + label(h) + " is not a unit multiple of " + label(sum));
      }
      omega[g * q + h] = phase;
    }
  }
  auto sys = PhaseSystem::assemble(std::move(ordering),
                                   std::vector<SiteMatrix>(matrices.begin(), matrices.end()), std::move(omega));
  const auto lemma = verify_lemma1(sys);
  if (!lemma.passed) {
    throw Error(ErrorKind::Lemma1Violation, lemma.violations.front());
  }
  return sys;
}

}  // namespace gaqec
