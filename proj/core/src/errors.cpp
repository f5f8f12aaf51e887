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

#include "gaqec/errors.hpp"

#include <utility>

namespace gaqec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ZeroMass: return "ZeroMass";
    case ErrorKind::EvenM: return "EvenM";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::TraceViolation: return "TraceViolation";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::Lemma1Violation: return "Lemma1Violation";
    case ErrorKind::NonOrthonormalBasis: return "NonOrthonormalBasis";
    case ErrorKind::NonCommutingGenerators: return "NonCommutingGenerators";
    case ErrorKind::ClosureOverflow: return "ClosureOverflow";
    case ErrorKind::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorKind::NoDistance: return "NoDistance";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

}  // namespace gaqec
