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

#ifndef GAQEC_ORACLE_HPP
#define GAQEC_ORACLE_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gaqec/check_report.hpp"
#include "gaqec/code_analysis.hpp"
#include "gaqec/error_basis.hpp"
#include "gaqec/group_algebra.hpp"

// Brute-force reference computations with explicitly materialized m^n x m^n
// matrices. Slow by construction; used to certify the fast paths.
namespace gaqec::oracle {

using DenseOperator = Eigen::MatrixXcd;

struct OracleOptions {
  // Largest state dimension m^n the oracle will materialize.
  std::size_t size_cap = 256;
};

// Kronecker product E_{g_1} x ... x E_{g_n}. Throws SizeCap.
DenseOperator build_operator(const PhaseSystem& sys, const ErrorLabel& label, const OracleOptions& options = {});

// tr(E_h^dag E_g^dag E_h E_g) / m^n.
Complex oracle_character(const PhaseSystem& sys, const ErrorLabel& h, const ErrorLabel& g,
                         const OracleOptions& options = {});

// Orthogonal projector onto the code. Stabilizer codes use the product of
// (1/m) sum_k S^k over generators S = e^{i pi phase/m} E_g, which requires S^m = I.
DenseOperator code_projector(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options = {});

// Orthonormal basis of the projector's range, as a basis-vector code.
CodeSpec codewords(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options = {});

// c_g = (tr E_g P^dag)(tr E_g^dag P) / K^2.
AlgebraElement oracle_associated_element(const PhaseSystem& sys, const CodeSpec& code,
                                         const OracleOptions& options = {});

// c'_h = tr(E_h^dag P E_h P) / K, i.e. (1/K) sum_{i,j} |<v_i|E_h|v_j>|^2.
AlgebraElement oracle_dual_element(const PhaseSystem& sys, const CodeSpec& code, const OracleOptions& options = {});

// Identity, trace and closure axioms of the single-site operators, with the
// closure phases taken from the system's phase table.
CheckReport verify_basis_axioms(const PhaseSystem& sys);

}  // namespace gaqec::oracle

#endif  // GAQEC_ORACLE_HPP
