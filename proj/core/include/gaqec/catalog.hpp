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

#ifndef GAQEC_CATALOG_HPP
#define GAQEC_CATALOG_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gaqec/code_analysis.hpp"

// Codes shipped with the library, in the code file format.
namespace gaqec::catalog {

std::vector<std::string_view> names();
std::optional<std::string_view> text(std::string_view name);
// Throws InvalidArgument for unknown names.
CodeSpec load(std::string_view name);

}  // namespace gaqec::catalog

#endif  // GAQEC_CATALOG_HPP
