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

#ifndef GAQEC_CHECK_REPORT_HPP
#define GAQEC_CHECK_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace gaqec {

// Outcome of a verification routine. Failures are collected, not thrown.
struct CheckReport {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> violations;

  static CheckReport start(std::string name, double tolerance) {
    CheckReport report;
    report.name = std::move(name);
    report.tolerance = tolerance;
    return report;
  }

  void observe(double residual) { max_residual = std::max(max_residual, residual); }

  void fail(std::string what) {
    passed = false;
    violations.push_back(std::move(what));
  }
};

}  // namespace gaqec

#endif  // GAQEC_CHECK_REPORT_HPP
