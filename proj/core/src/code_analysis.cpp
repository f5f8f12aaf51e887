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

#include "gaqec/code_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <string>
#include <utility>

#include "complex_ops.hpp"
#include "gaqec/errors.hpp"
#include "parallel.hpp"

namespace gaqec {
namespace {

// A site operator, stored as a permutation with phases when it has exactly one
// nonzero entry per column (true for the generalized Pauli family).
struct SiteAction {
  bool monomial = false;
  std::vector<std::uint32_t> target;
  std::vector<Complex> value;
  SiteMatrix dense;
};

std::vector<SiteAction> site_actions(const PhaseSystem& sys) {
  if (sys.site_operators().empty()) {
    throw Error(ErrorKind::InvalidArgument, "phase system carries no site operators");
  }
  const unsigned m = sys.m();
  std::vector<SiteAction> actions;
  actions.reserve(sys.alphabet_size());
  for (const auto& op : sys.site_operators()) {
    SiteAction action{.monomial = true, .target = {}, .value = {}, .dense = op};
    for (unsigned c = 0; c < m && action.monomial; ++c) {
      int nonzero = 0;
      for (unsigned r = 0; r < m; ++r) {
        if (op(r, c) != Complex{}) {
          ++nonzero;
          action.target.push_back(r);
          action.value.push_back(op(r, c));
        }
      }
      action.monomial = nonzero == 1;
    }
    actions.push_back(std::move(action));
  }
  return actions;
}

std::size_t state_dimension(unsigned m, std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= m;
  return dim;
}

// out = (I x ... x op x ... x I) in, where op acts on the digit with place value `stride`.
void apply_site(const SiteAction& op, unsigned m, std::size_t stride, std::size_t dim, const Complex* in,
                Complex* out) {
  const std::size_t blocks = dim / (stride * m);
  for (std::size_t b = 0; b < blocks; ++b) {
    const Complex* src_block = in + b * m * stride;
    Complex* dst_block = out + b * m * stride;
    if (op.monomial) {
      for (unsigned c = 0; c < m; ++c) {
        const Complex v = op.value[c];
        const Complex* src = src_block + c * stride;
        Complex* dst = dst_block + op.target[c] * stride;
        for (std::size_t t = 0; t < stride; ++t) dst[t] = detail::mul_complex(v, src[t]);
      }
      continue;
    }
    for (unsigned r = 0; r < m; ++r) {
      Complex* dst = dst_block + r * stride;
      std::fill(dst, dst + stride, Complex{});
      for (unsigned c = 0; c < m; ++c) {
        const Complex u = op.dense(r, c);
        if (u == Complex{}) continue;
        const Complex* src = src_block + c * stride;
        for (std::size_t t = 0; t < stride; ++t) detail::fma_complex(dst[t], u, src[t]);
      }
    }
  }
}

std::vector<std::size_t> site_strides(unsigned m, std::size_t n) {
  std::vector<std::size_t> strides(n);
  std::size_t stride = 1;
  for (std::size_t i = n; i-- > 0;) {
    strides[i] = stride;
    stride *= m;
  }
  return strides;
}

// Depth-first sweep over all labels, reusing the partial products
// E_{g_1} x ... x E_{g_k} applied to every basis vector.
class BasisSweep {
 public:
  BasisSweep(const PhaseSystem& sys, const BasisVectors& basis, std::size_t n, bool want_dual)
      : actions_(site_actions(sys)),
        m_(sys.m()),
        q_(sys.alphabet_size()),
        n_(n),
        dim_(state_dimension(sys.m(), n)),
        k_(basis.vectors.size()),
        strides_(site_strides(sys.m(), n)),
        want_dual_(want_dual),
        basis_(k_ * dim_),
        primary_(element_size(sys.m(), n)),
        dual_(want_dual ? primary_.size() : 0) {
    for (std::size_t i = 0; i < k_; ++i) {
      std::copy(basis.vectors[i].begin(), basis.vectors[i].end(), basis_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
    }
  }

  void run(unsigned threads) {
    detail::parallel_for(q_, threads, [this](std::size_t begin, std::size_t end) {
      Workspace ws{std::vector<Complex>(n_ * k_ * dim_), std::vector<Symbol>(n_), std::vector<Complex>(k_ * k_)};
      for (std::size_t first = begin; first < end; ++first) {
        descend(0, static_cast<Symbol>(first), static_cast<Symbol>(first + 1), basis_.data(), ws);
      }
    });
  }

  std::vector<Complex> take_primary() { return std::move(primary_); }
  std::vector<Complex> take_dual() { return std::move(dual_); }

 private:
  struct Workspace {
    std::vector<Complex> levels;
    std::vector<Symbol> symbols;
    std::vector<Complex> overlaps;
  };

  void descend(std::size_t level, Symbol first, Symbol last, const Complex* current, Workspace& ws) {
    Complex* scratch = ws.levels.data() + level * k_ * dim_;
    for (Symbol s = first; s < last; ++s) {
      const Complex* next = current;
      if (s != 0) {
        for (std::size_t v = 0; v < k_; ++v) {
          apply_site(actions_[s], m_, strides_[level], dim_, current + v * dim_, scratch + v * dim_);
        }
        next = scratch;
      }
      ws.symbols[level] = s;
      if (level + 1 == n_) {
        leaf(next, ws);
      } else {
        descend(level + 1, 0, static_cast<Symbol>(q_), next, ws);
      }
    }
  }

  // overlaps(i, j) = <v_i | E_g v_j>.
  void leaf(const Complex* images, Workspace& ws) {
    const std::size_t index = encode_symbols(ws.symbols, q_);
    const double k = static_cast<double>(k_);
    Complex trace{};
    double frobenius = 0.0;
    for (std::size_t i = 0; i < k_; ++i) {
      const Complex* bra = basis_.data() + i * dim_;
      for (std::size_t j = 0; j < k_; ++j) {
        if (!want_dual_ && i != j) continue;
        const Complex* ket = images + j * dim_;
        Complex acc{};
        for (std::size_t t = 0; t < dim_; ++t) detail::fma_complex(acc, std::conj(bra[t]), ket[t]);
        if (i == j) trace += acc;
        frobenius += std::norm(acc);
      }
    }
    primary_[index] = std::norm(trace) / (k * k);
    if (want_dual_) dual_[index] = frobenius / k;
  }

  std::vector<SiteAction> actions_;
  unsigned m_;
  std::size_t q_;
  std::size_t n_;
  std::size_t dim_;
  std::size_t k_;
  std::vector<std::size_t> strides_;
  bool want_dual_;
  std::vector<Complex> basis_;
  std::vector<Complex> primary_;
  std::vector<Complex> dual_;
};

void require_system(const PhaseSystem& sys, const CodeSpec& code) {
  if (sys.m() != code.m) {
    throw Error(ErrorKind::ShapeMismatch, "code has m=" + std::to_string(code.m) + " but the phase system has m=" +
                                              std::to_string(sys.m()));
  }
  if (code.n == 0) throw Error(ErrorKind::InvalidArgument, "code must act on at least one system");
}

std::size_t label_weight(std::size_t index, std::size_t q, std::size_t n) {
  std::size_t weight = 0;
  for (std::size_t i = 0; i < n; ++i) {
    weight += (index % q) != 0;
    index /= q;
  }
  return weight;
}

}  // namespace

void validate_code(const PhaseSystem& sys, const CodeSpec& code) {
  require_system(sys, code);
  if (const auto* basis = std::get_if<BasisVectors>(&code.body)) {
    const std::size_t dim = state_dimension(code.m, code.n);
    const std::size_t k = basis->vectors.size();
    if (k == 0 || k > dim) {
      throw Error(ErrorKind::InvalidArgument, "code needs between 1 and m^n = " + std::to_string(dim) +
                                                  " basis vectors, got " + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (basis->vectors[i].size() != dim) {
        throw Error(ErrorKind::InvalidArgument, "basis vector " + std::to_string(i) + " has length " +
                                                    std::to_string(basis->vectors[i].size()) + ", expected " +
                                                    std::to_string(dim));
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        Complex ip{};
        for (std::size_t t = 0; t < dim; ++t) ip += std::conj(basis->vectors[i][t]) * basis->vectors[j][t];
        const Complex expected = i == j ? Complex{1.0, 0.0} : Complex{};
        if (std::abs(ip - expected) > kTolerance) {
          throw Error(ErrorKind::NonOrthonormalBasis, "<v_" + std::to_string(i) + "|v_" + std::to_string(j) +
                                                          "> = " + std::to_string(std::abs(ip)) +
                                                          " in magnitude, expected " +
                                                          std::to_string(std::abs(expected)));
        }
      }
    }
    return;
  }
  const auto& gens = std::get<StabilizerGenerators>(code.body).generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].label.size() != code.n) {
      throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(i) + " has " +
                                                  std::to_string(gens[i].label.size()) + " sites, expected " +
                                                  std::to_string(code.n));
    }
    for (const auto& g : gens[i].label.coords) {
      if (g.a >= code.m || g.b >= code.m) {
        throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(i) + " has an exponent outside Z_m");
      }
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Complex commutator = character(sys, gens[i].label, gens[j].label);
      if (std::abs(commutator - Complex{1.0, 0.0}) > kTolerance) {
        throw Error(ErrorKind::NonCommutingGenerators,
                    "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      }
    }
  }
}

std::vector<Complex> apply_error(const PhaseSystem& sys, const ErrorLabel& label, std::span<const Complex> state) {
  const unsigned m = sys.m();
  const std::size_t n = label.size();
  const std::size_t dim = state_dimension(m, n);
  if (state.size() != dim) {
    throw Error(ErrorKind::ShapeMismatch, "state has length " + std::to_string(state.size()) + ", expected " +
                                              std::to_string(dim));
  }
  const auto actions = site_actions(sys);
  const auto strides = site_strides(m, n);
  std::vector<Complex> current(state.begin(), state.end());
  std::vector<Complex> next(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol s = sys.ordering().position(label.coords[i]);
    if (s == 0) continue;
    apply_site(actions[s], m, strides[i], dim, current.data(), next.data());
    std::swap(current, next);
  }
  return current;
}

AlgebraElement stabilizer_indicator(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  validate_code(sys, code);
  const auto* stab = std::get_if<StabilizerGenerators>(&code.body);
  if (stab == nullptr) throw Error(ErrorKind::InvalidArgument, "code is not given by stabilizer generators");
  const std::size_t q = sys.alphabet_size();
  const std::size_t n = code.n;
  const std::size_t count = element_size(code.m, n);
  const std::size_t cap = options.closure_cap == 0 ? count : options.closure_cap;

  std::vector<std::vector<Symbol>> generators;
  for (const auto& gen : stab->generators) generators.push_back(sys.symbols_of(gen.label));

  std::vector<Complex> coeffs(count);
  std::deque<std::size_t> frontier{0};
  coeffs[0] = 1.0;
  std::size_t size = 1;
  std::vector<Symbol> digits(n);
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    decode_symbols(current, q, digits);
    for (const auto& gen : generators) {
      std::size_t product = 0;
      for (std::size_t i = 0; i < n; ++i) product = product * q + sys.add(digits[i], gen[i]);
      if (coeffs[product] != Complex{}) continue;
      coeffs[product] = 1.0;
      if (++size > cap) {
        throw Error(ErrorKind::ClosureOverflow, "generated group exceeds " + std::to_string(cap) + " elements");
      }
      frontier.push_back(product);
    }
  }
  return AlgebraElement(code.m, n, std::move(coeffs));
}

CodeElements code_elements(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  validate_code(sys, code);
  if (code.is_stabilizer()) {
    auto primary = stabilizer_indicator(sys, code, options);
    auto dual = transform(sys, primary, TransformOptions{.threads = options.threads}).element;
    return {std::move(primary), std::move(dual)};
  }
  BasisSweep sweep(sys, std::get<BasisVectors>(code.body), code.n, true);
  sweep.run(options.threads);
  return {AlgebraElement(code.m, code.n, sweep.take_primary()), AlgebraElement(code.m, code.n, sweep.take_dual())};
}

AlgebraElement associated_element(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  validate_code(sys, code);
  if (code.is_stabilizer()) return stabilizer_indicator(sys, code, options);
  BasisSweep sweep(sys, std::get<BasisVectors>(code.body), code.n, false);
  sweep.run(options.threads);
  return AlgebraElement(code.m, code.n, sweep.take_primary());
}

AlgebraElement dual_element(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  return code_elements(sys, code, options).dual;
}

AnalysisReport analyze_elements(const AlgebraElement& primary, const AlgebraElement& dual) {
  if (primary.m() != dual.m() || primary.n() != dual.n()) {
    throw Error(ErrorKind::ShapeMismatch, "element and dual have different shapes");
  }
  const std::size_t n = primary.n();
  const std::size_t q = primary.alphabet_size();
  const double space = std::pow(static_cast<double>(primary.m()), static_cast<double>(n));

  AnalysisReport report;
  report.mass = primary.mass();
  if (std::abs(report.mass.imag()) > 1e-6 || report.mass.real() <= kMassThreshold) {
    throw Error(ErrorKind::NonIntegerDimension, "mass " + std::to_string(report.mass.real()) + "+" +
                                                    std::to_string(report.mass.imag()) +
                                                    "i does not give a positive dimension");
  }
  const double k = space / report.mass.real();
  const double rounded = std::round(k);
  if (std::abs(k - rounded) > 1e-6 || rounded < 1.0) {
    throw Error(ErrorKind::NonIntegerDimension, "m^n / M = " + std::to_string(k) + " is not an integer");
  }
  report.dimension = static_cast<std::size_t>(rounded);

  std::size_t distance = n + 1;
  for (std::size_t index = 1; index < primary.size(); ++index) {
    const bool witness = report.dimension > 1 ? std::abs(primary[index] - dual[index]) > kTolerance
                                              : std::abs(primary[index]) > kTolerance;
    if (witness) distance = std::min(distance, label_weight(index, q, n));
  }
  if (distance > n) {
    throw Error(ErrorKind::NoDistance, report.dimension > 1
                                           ? "no coefficient of the element differs from its transform"
                                           : "element has no support beyond the identity");
  }
  report.distance = distance;
  report.primary_distribution = hamming_distribution(primary);
  report.dual_distribution = hamming_distribution(dual);
  report.pure = true;
  for (std::size_t i = 1; i < distance; ++i) {
    if (std::abs(report.primary_distribution.coefficients[i]) > kTolerance) report.pure = false;
  }
  return report;
}

AnalysisReport analyze(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  const auto elements = code_elements(sys, code, options);
  return analyze_elements(elements.primary, elements.dual);
}

CheckReport check_cs_ordering(const AlgebraElement& primary, const AlgebraElement& dual) {
  auto report = CheckReport::start("cs", kTolerance);
  if (primary.size() != dual.size()) throw Error(ErrorKind::ShapeMismatch, "element and dual differ in size");
  for (std::size_t g = 0; g < primary.size(); ++g) {
    const double excess = std::max(0.0, primary[g].real() - dual[g].real());
    report.observe(excess);
    if (excess > kTolerance && report.violations.size() < 8) {
      report.fail("c_g exceeds c'_g at index " + std::to_string(g) + " by " + std::to_string(excess));
    }
  }
  return report;
}

CheckReport check_cs_ordering(const PhaseSystem& sys, const CodeSpec& code, const AnalysisOptions& options) {
  const auto elements = code_elements(sys, code, options);
  return check_cs_ordering(elements.primary, elements.dual);
}

CodeSpec random_code(unsigned m, std::size_t n, std::size_t dimension, std::uint64_t seed) {
  if (m < 2 || n == 0) throw Error(ErrorKind::InvalidArgument, "random codes need m >= 2 and n >= 1");
  const std::size_t dim = state_dimension(m, n);
  if (dimension == 0 || dimension > dim) {
    throw Error(ErrorKind::InvalidArgument, "code dimension must lie in [1, m^n]");
  }
  const auto rows = static_cast<Eigen::Index>(dim);
  const auto cols = static_cast<Eigen::Index>(dimension);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd draw(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (Eigen::Index r = 0; r < rows; ++r) {
        const double re = gauss(rng);
        draw(r, c) = Complex{re, gauss(rng)};
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(draw);
    const auto diagonal = qr.matrixQR().diagonal().cwiseAbs();
    if (diagonal.minCoeff() <= 1e-8 * diagonal.maxCoeff()) continue;
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    BasisVectors basis;
    for (Eigen::Index c = 0; c < cols; ++c) {
      basis.vectors.emplace_back(q.col(c).data(), q.col(c).data() + rows);
    }
    return CodeSpec{.m = m, .n = n, .body = std::move(basis)};
  }
  throw Error(ErrorKind::RankDeficient, "could not draw a full-rank Gaussian matrix after " +
                                            std::to_string(kAttempts) + " attempts");
}

}  // namespace gaqec
