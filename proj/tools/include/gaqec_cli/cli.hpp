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

#ifndef GAQEC_CLI_CLI_HPP
#define GAQEC_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace gaqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name) and returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string_view version() noexcept;

// 64-bit FNV-1a, used as the input digest in every report.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

}  // namespace gaqec::cli

#endif  // GAQEC_CLI_CLI_HPP
