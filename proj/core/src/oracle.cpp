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

#include "gaqec/oracle.hpp"

#include <cmath>
#include <string>

#include "gaqec/errors.hpp"

namespace gaqec::oracle {
namespace {

std::size_t checked_dimension(unsigned m, std::size_t n, const OracleOptions& options) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= m;
    if (dim > options.size_cap) {
      throw Error(ErrorKind::SizeCap, "m^n exceeds the oracle size cap of " + std::to_string(options.size_cap));
    }
  }
  return dim;
}

// tr(A B) without forming the product.
Complex trace_of_product(const DenseOperator& a, const DenseOperator& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

std::size_t code_rank(const CodeSpec& code, const DenseOperator& projector) {
  if (const auto* basis = std::get_if<BasisVectors>(&code.body)) return basis->vectors.size();
  return static_cast<std::size_t>(std::lround(projector.trace().real()));
}

}  // namespace

DenseOperator build_operator(const PhaseSystem& sys, const ErrorLabel& label, const OracleOptions& options) {
  checked_dimension(sys.m(), label.size(), options);
  DenseOperator result = DenseOperator::Identity(1, 1);
  for (const auto& g : label.coords) {
    const auto& site = sys.site_operator(sys.ordering().position(g));
    DenseOperator next(result.rows() * site.rows(), result.cols() * site.cols());
    for (Eigen::Index r = 0; r < result.rows(); ++r) {
      for (Eigen::Index c = 0; c < result.cols(); ++c) {
        next.block(r * site.rows(), c * site.cols(), site.rows(), site.cols()) = result(r, c) * site;
      }
    }
    result = std::move(next);
  }
  return result;
}

Complex oracle_character(const PhaseSystem& sys, const ErrorLabel& h, const ErrorLabel& g,
                         const OracleOptions& options) {
  const auto eh = build_operator(sys, h, options);
  const auto eg = build_operator(sys, g, options);
  const DenseOperator product = eh.adjoint() * eg.adjoint() * eh * eg;
  return product.trace() / static_cast<double>(eh.rows());
}

DenseOperator code_projector(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options) {
  validate_code(sys, code);
  const auto dim = static_cast<Eigen::Index>(checked_dimension(code.m, code.n, options));
  if (const auto* basis = std::get_if<BasisVectors>(&code.body)) {
    DenseOperator projector = DenseOperator::Zero(dim, dim);
    for (const auto& v : basis->vectors) {
      const Eigen::Map<const Eigen::VectorXcd> col(v.data(), dim);
      projector += col * col.adjoint();
    }
    return projector;
  }
  const auto& gens = std::get<StabilizerGenerators>(code.body).generators;
  const DenseOperator identity = DenseOperator::Identity(dim, dim);
  DenseOperator projector = identity;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const DenseOperator s = root_of_unity(gens[j].phase, 2 * code.m) * build_operator(sys, gens[j].label, options);
    DenseOperator power = identity;
    DenseOperator average = DenseOperator::Zero(dim, dim);
    for (unsigned k = 0; k < code.m; ++k) {
      average += power;
      power = power * s;
    }
    if ((power - identity).cwiseAbs().maxCoeff() > kTolerance) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + std::to_string(j) + " with phase " + std::to_string(gens[j].phase) +
                      " does not satisfy S^m = I; adjust its phase exponent");
    }
    projector = projector * (average / static_cast<double>(code.m));
  }
  return projector;
}

CodeSpec codewords(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options) {
  const DenseOperator projector = code_projector(sys, code, options);
  const DenseOperator hermitian = (projector + projector.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<DenseOperator> eig(hermitian);
  BasisVectors basis;
  for (Eigen::Index c = 0; c < hermitian.cols(); ++c) {
    if (eig.eigenvalues()(c) > 0.5) {
      const auto col = eig.eigenvectors().col(c);
      basis.vectors.emplace_back(col.data(), col.data() + col.size());
    }
  }
  if (basis.vectors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "the stabilizer fixes no nonzero state");
  }
  return CodeSpec{.m = code.m, .n = code.n, .body = std::move(basis)};
}

AlgebraElement oracle_associated_element(const PhaseSystem& sys, const CodeSpec& code,
                                         const OracleOptions& options) {
  const DenseOperator projector = code_projector(sys, code, options);
  const double k = static_cast<double>(code_rank(code, projector));
  std::vector<Complex> coeffs(element_size(code.m, code.n));
  for (std::size_t index = 0; index < coeffs.size(); ++index) {
    const auto e = build_operator(sys, sys.label_at(index, code.n), options);
    const Complex left = trace_of_product(e, projector.adjoint());
    const Complex right = trace_of_product(e.adjoint(), projector);
    coeffs[index] = left * right / (k * k);
  }
  return AlgebraElement(code.m, code.n, std::move(coeffs));
}

AlgebraElement oracle_dual_element(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options) {
  const DenseOperator projector = code_projector(sys, code, options);
  const double k = static_cast<double>(code_rank(code, projector));
  std::vector<Complex> coeffs(element_size(code.m, code.n));
  for (std::size_t index = 0; index < coeffs.size(); ++index) {
    const auto e = build_operator(sys, sys.label_at(index, code.n), options);
    const DenseOperator conjugated = e.adjoint() * projector * e;
    coeffs[index] = trace_of_product(conjugated, projector) / k;
  }
  return AlgebraElement(code.m, code.n, std::move(coeffs));
}

CheckReport verify_basis_axioms(const PhaseSystem& sys) {
  auto report = CheckReport::start("axioms", kTolerance);
  const unsigned m = sys.m();
  const std::size_t q = sys.alphabet_size();
  const DenseOperator identity = DenseOperator::Identity(m, m);
  const auto check = [&report](double residual, const std::string& what) {
    report.observe(residual);
    if (residual > kTolerance) report.fail(what + " (residual " + std::to_string(residual) + ")");
  };
  for (Symbol g = 0; g < q; ++g) {
    const auto& e = sys.site_operator(g);
    check((e.adjoint() * e - identity).cwiseAbs().maxCoeff(), "E_" + std::to_string(g) + " not unitary");
    const Complex expected_trace = g == 0 ? Complex{static_cast<double>(m), 0.0} : Complex{};
    check(std::abs(e.trace() - expected_trace), "tr E_" + std::to_string(g) + " != m delta_{g,0}");
  }
  check((sys.site_operator(0) - identity).cwiseAbs().maxCoeff(), "E_0 is not the identity");
  for (Symbol g = 0; g < q; ++g) {
    for (Symbol h = 0; h < q; ++h) {
      const Complex phase = sys.omega(g, h);
      const std::string pair = "(" + std::to_string(g) + "," + std::to_string(h) + ")";
      check(std::abs(std::abs(phase) - 1.0), "omega" + pair + " is not a unit phase");
      const DenseOperator residual =
          sys.site_operator(g) * sys.site_operator(h) - phase * sys.site_operator(sys.add(g, h));
      check(residual.cwiseAbs().maxCoeff(), "E_g E_h != omega E_{g+h} for " + pair);
    }
  }
  return report;
}

}  // namespace gaqec::oracle
