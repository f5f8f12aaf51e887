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

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <system_error>

#include "gaqec/errors.hpp"

namespace gaqec::formats {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

// Significant lines only; comments and blanks are dropped.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_tokens(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view source) : source_(source), lines_(lex(text)) {
    if (lines_.empty()) throw ParseError(source_, 1, "file is empty");
  }

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ParseError(source_, line, message);
  }

  const Line& header() const { return lines_.front(); }
  std::span<const Line> body() const { return std::span<const Line>(lines_).subspan(1); }

  std::map<std::string_view, std::string_view> header_fields(std::string_view expected_kind) const {
    const Line& h = header();
    if (h.tokens.front() != expected_kind) {
      fail(h.number, "expected a '" + std::string(expected_kind) + "' header, found '" +
                         std::string(h.tokens.front()) + "'");
    }
    std::map<std::string_view, std::string_view> fields;
    for (std::size_t i = 1; i < h.tokens.size(); ++i) {
      const auto token = h.tokens[i];
      const auto eq = token.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(h.number, "header field '" + std::string(token) + "' is not key=value");
      }
      if (!fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
        fail(h.number, "header field '" + std::string(token.substr(0, eq)) + "' repeated");
      }
    }
    return fields;
  }

  std::string_view required(const std::map<std::string_view, std::string_view>& fields, std::string_view key) const {
    const auto it = fields.find(key);
    if (it == fields.end()) fail(header().number, "header is missing '" + std::string(key) + "='");
    return it->second;
  }

  template <typename Int>
  Int integer(std::string_view token, std::size_t line, std::string_view what) const {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(line, "invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
  }

  double real(std::string_view token, std::size_t line) const {
    double value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail(line, "invalid number '" + std::string(token) + "'");
    }
    return value;
  }

  Complex complex(std::string_view token, std::size_t line) const {
    const auto comma = token.find(',');
    if (comma == std::string_view::npos) fail(line, "expected 're,im', found '" + std::string(token) + "'");
    return {real(token.substr(0, comma), line), real(token.substr(comma + 1), line)};
  }

  unsigned level_count(const std::map<std::string_view, std::string_view>& fields) const {
    const auto m = integer<unsigned>(required(fields, "m"), header().number, "m");
    if (m < 2) fail(header().number, "m must be at least 2");
    return m;
  }

  std::size_t site_count(const std::map<std::string_view, std::string_view>& fields) const {
    const auto n = integer<std::size_t>(required(fields, "n"), header().number, "n");
    if (n == 0) fail(header().number, "n must be at least 1");
    return n;
  }

  GroupOrdering ordering(const std::map<std::string_view, std::string_view>& fields, unsigned m) const {
    const auto it = fields.find("ordering");
    const std::string_view name = it == fields.end() ? std::string_view("standard") : it->second;
    try {
      return GroupOrdering::by_name(m, name);
    } catch (const Error& e) {
      fail(header().number, e.what());
    }
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Line> lines_;
};

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / base) {
      throw Error(ErrorKind::SizeCap, "dimension overflows");
    }
    out *= base;
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_complex(Complex value) { return format_real(value.real()) + "," + format_real(value.imag()); }

FileKind detect_kind(std::string_view text, std::string_view source) {
  const Parser parser(text, source);
  const auto word = parser.header().tokens.front();
  if (word == "code") return FileKind::Code;
  if (word == "element") return FileKind::Element;
  if (word == "basis") return FileKind::Basis;
  parser.fail(parser.header().number, "unknown file kind '" + std::string(word) +
                                          "' (expected code, element or basis)");
}

CodeSpec parse_code(std::string_view text, std::string_view source) {
  const Parser parser(text, source);
  const auto fields = parser.header_fields("code");
  CodeSpec code;
  code.m = parser.level_count(fields);
  code.n = parser.site_count(fields);
  const auto kind = parser.required(fields, "kind");
  if (kind == "stabilizer") {
    StabilizerGenerators stab;
    for (const auto& line : parser.body()) {
      StabilizerGenerator gen;
      std::size_t pairs = line.tokens.size();
      if (!line.tokens.empty() && line.tokens.back().starts_with("phase=")) {
        gen.phase = parser.integer<int>(line.tokens.back().substr(6), line.number, "phase exponent");
        --pairs;
      }
      if (pairs != code.n) {
        parser.fail(line.number, "expected " + std::to_string(code.n) + " pairs 'a,b', found " + std::to_string(pairs));
      }
      for (std::size_t i = 0; i < pairs; ++i) {
        const auto token = line.tokens[i];
        const auto comma = token.find(',');
        if (comma == std::string_view::npos) {
          parser.fail(line.number, "expected 'a,b', found '" + std::string(token) + "'");
        }
        const auto a = parser.integer<std::uint32_t>(token.substr(0, comma), line.number, "exponent");
        const auto b = parser.integer<std::uint32_t>(token.substr(comma + 1), line.number, "exponent");
        if (a >= code.m || b >= code.m) {
          parser.fail(line.number, "exponents in '" + std::string(token) + "' must be below m=" + std::to_string(code.m));
        }
        gen.label.coords.push_back({a, b});
      }
      stab.generators.push_back(std::move(gen));
    }
    code.body = std::move(stab);
  } else if (kind == "basis") {
    const std::size_t dim = power(code.m, code.n);
    BasisVectors basis;
    for (const auto& line : parser.body()) {
      if (line.tokens.size() != dim) {
        parser.fail(line.number, "expected m^n = " + std::to_string(dim) + " amplitudes, found " +
                                     std::to_string(line.tokens.size()));
      }
      std::vector<Complex> v;
      v.reserve(dim);
      for (const auto token : line.tokens) v.push_back(parser.complex(token, line.number));
      basis.vectors.push_back(std::move(v));
    }
    if (basis.vectors.empty()) parser.fail(parser.header().number, "basis code lists no vectors");
    code.body = std::move(basis);
  } else {
    parser.fail(parser.header().number, "unknown code kind '" + std::string(kind) + "' (expected stabilizer or basis)");
  }
  return code;
}

std::string format_code(const CodeSpec& code) {
  std::ostringstream out;
  out << "code m=" << code.m << " n=" << code.n << " kind=" << (code.is_stabilizer() ? "stabilizer" : "basis") << '\n';
  if (const auto* stab = std::get_if<StabilizerGenerators>(&code.body)) {
    for (const auto& gen : stab->generators) {
      for (std::size_t i = 0; i < gen.label.size(); ++i) {
        out << (i ? " " : "") << gen.label.coords[i].a << ',' << gen.label.coords[i].b;
      }
      if (gen.phase != 0) out << " phase=" << gen.phase;
      out << '\n';
    }
  } else {
    for (const auto& v : std::get<BasisVectors>(code.body).vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << format_complex(v[i]);
      out << '\n';
    }
  }
  return out.str();
}

ElementFile parse_element(std::string_view text, std::string_view source) {
  const Parser parser(text, source);
  const auto fields = parser.header_fields("element");
  const unsigned m = parser.level_count(fields);
  const std::size_t n = parser.site_count(fields);
  const auto ordering = parser.ordering(fields, m);
  std::vector<Complex> coeffs;
  try {
    coeffs.resize(element_size(m, n));
  } catch (const Error& e) {
    parser.fail(parser.header().number, e.what());
  }
  std::vector<bool> seen(coeffs.size(), false);
  for (const auto& line : parser.body()) {
    if (line.tokens.size() != 2) parser.fail(line.number, "expected '<index> re,im'");
    const auto index = parser.integer<std::size_t>(line.tokens[0], line.number, "index");
    if (index >= coeffs.size()) {
      parser.fail(line.number, "index " + std::to_string(index) + " is outside [0, m^(2n)) = [0, " +
                                   std::to_string(coeffs.size()) + ")");
    }
    if (seen[index]) parser.fail(line.number, "index " + std::to_string(index) + " listed twice");
    seen[index] = true;
    coeffs[index] = parser.complex(line.tokens[1], line.number);
  }
  return {AlgebraElement(m, n, std::move(coeffs)), std::string(ordering.name())};
}

std::string format_element(const AlgebraElement& element, std::string_view ordering) {
  std::ostringstream out;
  out << "element m=" << element.m() << " n=" << element.n() << " ordering=" << ordering << '\n';
  for (std::size_t index = 0; index < element.size(); ++index) {
    if (element[index] == Complex{}) continue;
    out << index << ' ' << format_complex(element[index]) << '\n';
  }
  return out.str();
}

BasisFile parse_basis(std::string_view text, std::string_view source) {
  const Parser parser(text, source);
  const auto fields = parser.header_fields("basis");
  const unsigned m = parser.level_count(fields);
  auto ordering = parser.ordering(fields, m);
  const auto rows = parser.body();
  const std::size_t q = std::size_t{m} * m;
  if (rows.size() != q * m) {
    parser.fail(rows.empty() ? parser.header().number : rows.back().number,
                "expected m^3 = " + std::to_string(q * m) + " matrix rows, found " + std::to_string(rows.size()));
  }
  std::vector<SiteMatrix> matrices(q, SiteMatrix::Zero(m, m));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& line = rows[r];
    if (line.tokens.size() != m) {
      parser.fail(line.number, "expected " + std::to_string(m) + " entries 're,im' per row");
    }
    for (unsigned c = 0; c < m; ++c) {
      matrices[r / m](static_cast<Eigen::Index>(r % m), c) = parser.complex(line.tokens[c], line.number);
    }
  }
  return {std::move(ordering), std::move(matrices)};
}

std::string format_basis(const PhaseSystem& sys) {
  std::ostringstream out;
  out << "basis m=" << sys.m() << " ordering=" << sys.ordering().name() << '\n';
  for (Symbol s = 0; s < sys.alphabet_size(); ++s) {
    const auto g = sys.ordering()[s];
    out << "# E_" << s << " g=(" << g.a << "," << g.b << ")\n";
    const auto& mat = sys.site_operator(s);
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      for (Eigen::Index c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << format_complex(mat(r, c));
      out << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace gaqec::formats
