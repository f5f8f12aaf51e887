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

#ifndef GAQEC_FORMATS_HPP
#define GAQEC_FORMATS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gaqec/code_analysis.hpp"
#include "gaqec/error_basis.hpp"
#include "gaqec/group_algebra.hpp"

// Plain-text file formats. Every format is line oriented: '#' starts a
// comment, blank lines are ignored, and the first remaining line is a header
// "<kind> key=value ...". Numbers are written with the shortest representation
// that round-trips, so a written file re-reads to identical coefficients.
//
// Code file:
//   code m=<m> n=<n> kind=stabilizer
//   a,b a,b ... a,b [phase=<p>]          one generator per line, n pairs
//
//   code m=<m> n=<n> kind=basis
//   re,im re,im ... re,im                one basis vector per line, m^n amplitudes
//
// Element file:
//   element m=<m> n=<n> [ordering=row-major|lee|standard]
//   <index> re,im                        one line per stored coefficient
//
// Basis file:
//   basis m=<m> [ordering=row-major|lee|standard]
//   re,im ... re,im                      m rows per matrix, m^2 matrices in ordering order
namespace gaqec::formats {

enum class FileKind { Code, Element, Basis };

FileKind detect_kind(std::string_view text, std::string_view source = "<input>");

CodeSpec parse_code(std::string_view text, std::string_view source = "<input>");
std::string format_code(const CodeSpec& code);

struct ElementFile {
  AlgebraElement element;
  std::string ordering;
};

ElementFile parse_element(std::string_view text, std::string_view source = "<input>");
std::string format_element(const AlgebraElement& element, std::string_view ordering = "standard");

struct BasisFile {
  GroupOrdering ordering;
  std::vector<SiteMatrix> matrices;
};

BasisFile parse_basis(std::string_view text, std::string_view source = "<input>");
std::string format_basis(const PhaseSystem& sys);

std::string format_complex(Complex value);
std::string read_file(const std::filesystem::path& path);

}  // namespace gaqec::formats

#endif  // GAQEC_FORMATS_HPP
