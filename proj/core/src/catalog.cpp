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

#include "gaqec/catalog.hpp"

#include <string>
#include <utility>

#include "gaqec/errors.hpp"
#include "gaqec/formats.hpp"

namespace gaqec::detail {
extern const std::pair<std::string_view, std::string_view> kCatalogEntries[];
extern const std::size_t kCatalogSize;
}  // namespace gaqec::detail

namespace gaqec::catalog {

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < detail::kCatalogSize; ++i) out.push_back(detail::kCatalogEntries[i].first);
  return out;
}

std::optional<std::string_view> text(std::string_view name) {
  for (std::size_t i = 0; i < detail::kCatalogSize; ++i) {
    if (detail::kCatalogEntries[i].first == name) return detail::kCatalogEntries[i].second;
  }
  return std::nullopt;
}

CodeSpec load(std::string_view name) {
  const auto body = text(name);
  if (!body) throw Error(ErrorKind::InvalidArgument, "no catalog code named '" + std::string(name) + "'");
  return formats::parse_code(*body, "catalog:" + std::string(name));
}

}  // namespace gaqec::catalog
