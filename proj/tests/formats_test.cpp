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

#include "gaqec/formats.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gaqec/catalog.hpp"
#include "gaqec/errors.hpp"
#include "test_support.hpp"

namespace gaqec {
namespace {

std::size_t error_line(std::string_view text, auto parse) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(Catalog, ListsShippedCodes) {
  const auto names = catalog::names();
  for (const char* expected : {"five_qubit", "four_two_two", "shor", "qutrit_repetition", "full_space_2x2"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
  EXPECT_FALSE(catalog::text("no_such_code").has_value());
  EXPECT_THROW(catalog::load("no_such_code"), Error);
}

TEST(Catalog, FiveQubitParses) {
  const auto code = catalog::load("five_qubit");
  EXPECT_EQ(code.m, 2u);
  EXPECT_EQ(code.n, 5u);
  const auto& gens = std::get<StabilizerGenerators>(code.body).generators;
  ASSERT_EQ(gens.size(), 5u);
  EXPECT_EQ(gens[0].label, testing::qubit_label("XZZXI"));
  EXPECT_EQ(gens[4].label, testing::qubit_label("ZZXIX"));
}

TEST(CodeFormat, RoundTripsCatalog) {
  for (auto name : catalog::names()) {
    const auto code = catalog::load(name);
    const auto again = formats::parse_code(formats::format_code(code));
    EXPECT_EQ(formats::format_code(again), formats::format_code(code)) << name;
  }
}

TEST(CodeFormat, ParsesPhasesAndComments) {
  const auto code = formats::parse_code(
      "# comment\n"
      "\n"
      "code m=3 n=2 kind=stabilizer   # trailing\n"
      "0,1 0,2 phase=1\n");
  const auto& gens = std::get<StabilizerGenerators>(code.body).generators;
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0].phase, 1);
  EXPECT_EQ(gens[0].label, (ErrorLabel{{{0, 1}, {0, 2}}}));
}

TEST(CodeFormat, ErrorsCarryLineNumbers) {
  const auto parse = [](std::string_view t) { return formats::parse_code(t, "test"); };
  EXPECT_EQ(error_line("code m=2 n=2 kind=stabilizer\n1,0 0,1\n1,0\n", parse), 3u);
  EXPECT_EQ(error_line("# c\ncode m=2 n=1 kind=stabilizer\n2,0\n", parse), 3u);
  EXPECT_EQ(error_line("\n\ncode m=x n=1 kind=stabilizer\n", parse), 3u);
  EXPECT_EQ(error_line("code m=2 kind=basis\n", parse), 1u);
  EXPECT_EQ(error_line("code m=2 n=1 kind=basis\n1,0 0,0\n1,0\n", parse), 3u);
  EXPECT_EQ(error_line("code m=2 n=1 kind=basis\n1,0 zero\n", parse), 2u);
  EXPECT_EQ(error_line("code m=2 n=1 kind=weird\n", parse), 1u);
  EXPECT_EQ(error_line("element m=2 n=1\n", parse), 1u);
  EXPECT_EQ(error_line("", parse), 1u);
}

TEST(CodeFormat, ErrorMessageNamesSource) {
  try {
    formats::parse_code("code m=2 n=1 kind=stabilizer\n1;0\n", "my.code");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "my.code");
    EXPECT_NE(std::string(e.what()).find("my.code"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

TEST(ElementFormat, RoundTripIsExact) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> unit(-1e3, 1e3);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = 2 + trial % 3;
    const std::size_t n = 1 + trial % 2;
    std::vector<Complex> coeffs(element_size(m, n));
    for (auto& c : coeffs) {
      if (rng() % 3 == 0) continue;
      c = {unit(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20), unit(rng)};
    }
    const AlgebraElement element(m, n, coeffs);
    const auto file = formats::parse_element(formats::format_element(element, "row-major"));
    EXPECT_EQ(file.ordering, "row-major");
    ASSERT_EQ(file.element.size(), element.size());
    for (std::size_t i = 0; i < element.size(); ++i) ASSERT_EQ(file.element[i], element[i]);
  }
}

TEST(ElementFormat, DefaultsAndErrors) {
  const auto file = formats::parse_element("element m=3 n=1\n4 1,0\n");
  EXPECT_EQ(file.ordering, "lee");
  EXPECT_EQ(file.element[4], Complex(1.0, 0.0));
  EXPECT_EQ(file.element.mass(), Complex(1.0, 0.0));

  const auto parse = [](std::string_view t) { return formats::parse_element(t); };
  EXPECT_EQ(error_line("element m=2 n=1\n0 1,0\n16 1,0\n", parse), 3u);
  EXPECT_EQ(error_line("element m=2 n=1\n0 1,0\n0 2,0\n", parse), 3u);
  EXPECT_EQ(error_line("element m=2 n=1 ordering=lee\n", parse), 1u);
  EXPECT_EQ(error_line("element m=2 n=1\n1\n", parse), 2u);
}

TEST(FileKind, Detects) {
  EXPECT_EQ(formats::detect_kind("code m=2 n=1 kind=basis\n"), formats::FileKind::Code);
  EXPECT_EQ(formats::detect_kind("# x\nelement m=2 n=1\n"), formats::FileKind::Element);
  EXPECT_EQ(formats::detect_kind("basis m=2\n"), formats::FileKind::Basis);
  EXPECT_THROW(formats::detect_kind("matrix\n"), ParseError);
}

TEST(BasisFormat, RoundTripBuildsSameSystem) {
  for (unsigned m : {2u, 3u}) {
    const auto sys = build_pauli_system(m);
    const auto file = formats::parse_basis(formats::format_basis(sys));
    EXPECT_EQ(file.matrices.size(), std::size_t{m} * m);
    const auto rebuilt = validate_custom_basis(file.matrices, file.ordering);
    for (std::size_t i = 0; i < sys.kernel_table().size(); ++i) {
      EXPECT_LT(std::abs(sys.kernel_table()[i] - rebuilt.kernel_table()[i]), 1e-12);
    }
  }
}

TEST(BasisFormat, RejectsWrongRowCount) {
  const auto parse = [](std::string_view t) { return formats::parse_basis(t); };
  EXPECT_EQ(error_line("basis m=2\n1,0 0,0\n0,0 1,0\n", parse), 3u);
  EXPECT_EQ(error_line("basis m=2\n", parse), 1u);
}

}  // namespace
}  // namespace gaqec
