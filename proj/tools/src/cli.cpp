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

#include "gaqec_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "gaqec/catalog.hpp"
#include "gaqec/code_analysis.hpp"
#include "gaqec/enumerators.hpp"
#include "gaqec/errors.hpp"
#include "gaqec/formats.hpp"
#include "gaqec/group_algebra.hpp"
#include "gaqec/oracle.hpp"

namespace gaqec::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxListedViolations = 20;

struct Settings {
  std::string format = "text";
  unsigned threads = 0;
  bool timings = false;
  std::vector<std::string> arguments;
  Clock::time_point start = Clock::now();

  bool machine() const { return format == "machine"; }
};

// Raw bytes of one input plus the name used in diagnostics.
struct Source {
  std::string name;
  std::string text;
};

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string shortest(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string brief(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", value);
  return buf;
}

std::string value_text(Complex v) {
  if (std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v.real()))) return shortest(v.real());
  return shortest(v.real()) + (v.imag() < 0 ? "-" : "+") + shortest(std::abs(v.imag())) + "i";
}

Json value_json(Complex v) { return Json::array({v.real(), v.imag()}); }

template <typename Key>
std::string key_text(const Key& key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
  return s + ")";
}

class Report {
 public:
  Report(std::string command, const Source& source, const Settings& settings)
      : command_(std::move(command)),
        source_(source.name),
        digest_(hex64(fnv1a(source.text))),
        settings_(settings) {}

  Json& results() { return results_; }
  void line(std::string text) { lines_.push_back(std::move(text)); }

  void emit(std::ostream& out) const {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - settings_.start).count();
    if (settings_.machine()) {
      Json root;
      root["tool"] = "gaqec";
      root["version"] = std::string(version());
      root["command"] = command_;
      root["arguments"] = settings_.arguments;
      root["input"] = {{"source", source_}, {"digest", "fnv1a:" + digest_}};
      root["results"] = results_;
      if (settings_.timings) root["timings"] = {{"wall_ms", ms}};
      out << root.dump(2) << '\n';
      return;
    }
    out << "# gaqec " << version() << ' ' << command_ << ' ' << source_ << " fnv1a:" << digest_ << '\n';
    for (const auto& l : lines_) out << l << '\n';
    if (settings_.timings) out << "# wall time " << brief(ms) << " ms\n";
  }

 private:
  std::string command_;
  std::string source_;
  std::string digest_;
  const Settings& settings_;
  Json results_ = Json::object();
  std::vector<std::string> lines_;
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const char* env = std::getenv("GAQEC_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorKind::InvalidArgument, "GAQEC_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

Source read_source(const std::string& location) {
  if (location.starts_with("catalog:")) {
    const auto name = std::string_view(location).substr(8);
    const auto text = catalog::text(name);
    if (!text) {
      throw Error(ErrorKind::InvalidArgument,
                  "no catalog entry '" + std::string(name) + "' (run 'gaqec catalog' to list entries)");
    }
    return {location, std::string(*text)};
  }
  return {location, formats::read_file(location)};
}

// An algebra element together with the phase system it lives in.
struct ElementInput {
  PhaseSystem sys;
  AlgebraElement element;
  std::optional<CodeSpec> code;
};

ElementInput element_from(const Source& source, unsigned threads) {
  switch (formats::detect_kind(source.text, source.name)) {
    case formats::FileKind::Code: {
      auto code = formats::parse_code(source.text, source.name);
      auto sys = build_pauli_system(code.m);
      auto element = associated_element(sys, code, {.threads = threads});
      return {std::move(sys), std::move(element), std::move(code)};
    }
    case formats::FileKind::Element: {
      auto file = formats::parse_element(source.text, source.name);
      auto sys = build_pauli_system(file.element.m(), GroupOrdering::by_name(file.element.m(), file.ordering));
      return {std::move(sys), std::move(file.element), std::nullopt};
    }
    case formats::FileKind::Basis:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, source.name + ": expected a code or element file, found a basis file");
}

CodeSpec code_from(const Source& source, std::string_view command) {
  if (formats::detect_kind(source.text, source.name) != formats::FileKind::Code) {
    throw Error(ErrorKind::InvalidArgument, std::string(command) + " needs a code file; '" + source.name + "' is not one");
  }
  return formats::parse_code(source.text, source.name);
}

struct RenderedHamming {
  std::string text;
  Json machine;
  std::optional<double> residual;
};

RenderedHamming render(const HammingDistribution& dist) {
  RenderedHamming out;
  double residual = 0.0;
  const auto ints = integer_coefficients(dist, 1e-6, &residual);
  out.text = "(";
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < dist.coefficients.size(); ++i) {
    out.text += i ? "," : "";
    out.text += ints ? std::to_string((*ints)[i]) : value_text(dist.coefficients[i]);
    coeffs.push_back(value_json(dist.coefficients[i]));
  }
  out.text += ")";
  out.machine["coefficients"] = std::move(coeffs);
  if (ints) {
    out.machine["integers"] = *ints;
    out.machine["rounding_residual"] = residual;
    out.residual = residual;
  }
  return out;
}

void note_rounding(Report& report, const RenderedHamming& a, const RenderedHamming& b) {
  if (a.residual && b.residual) {
    report.line("# A and A' rounded to integers, max residual " + brief(std::max(*a.residual, *b.residual)));
  } else if (a.residual || b.residual) {
    report.line("# " + std::string(a.residual ? "A" : "A'") + " rounded to integers, max residual " +
                brief(a.residual ? *a.residual : *b.residual));
  }
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& input, const Settings& settings, std::ostream& out) {
  const auto source = read_source(input);
  const auto code = code_from(source, "analyze");
  const auto sys = build_pauli_system(code.m);
  Report report("analyze", source, settings);
  const auto result = analyze(sys, code, {.threads = resolve_threads(settings.threads)});
  const auto a = render(result.primary_distribution);
  const auto b = render(result.dual_distribution);
  report.line("K=" + std::to_string(result.dimension) + " d=" + std::to_string(result.distance) +
              " pure=" + (result.pure ? "yes" : "no") + "; A=" + a.text + "; A'=" + b.text);
  note_rounding(report, a, b);
  auto& r = report.results();
  r["m"] = code.m;
  r["n"] = code.n;
  r["K"] = result.dimension;
  r["d"] = result.distance;
  r["pure"] = result.pure;
  r["mass"] = value_json(result.mass);
  r["A"] = a.machine;
  r["A_dual"] = b.machine;
  report.emit(out);
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

template <typename Terms>
void list_terms(Report& report, Json& machine, const std::string& title, const Terms& terms) {
  report.line(title + ":");
  machine = Json::array();
  for (const auto& [key, coeff] : terms) {
    if (std::abs(coeff) <= 1e-12) continue;
    report.line("  " + key_text(key) + " " + value_text(coeff));
    machine.push_back({{"key", key}, {"value", value_json(coeff)}});
  }
}

int cmd_enumerate(const std::string& input, const std::string& kind, const Settings& settings, std::ostream& out) {
  const auto source = read_source(input);
  const unsigned threads = resolve_threads(settings.threads);
  const auto in = element_from(source, threads);
  if (kind == "lee" && in.sys.m() % 2 == 0) {
    throw Error(ErrorKind::EvenM, "the Lee enumerator is defined only for odd m; this input has m=" +
                                      std::to_string(in.sys.m()));
  }
  const AlgebraElement dual = in.code ? dual_element(in.sys, *in.code, {.threads = threads})
                                      : transform(in.sys, in.element, {.threads = threads}).element;
  Report report("enumerate", source, settings);
  auto& r = report.results();
  r["kind"] = kind;
  r["m"] = in.sys.m();
  r["n"] = in.element.n();
  r["ordering"] = std::string(in.sys.ordering().name());
  if (kind == "hamming") {
    const auto a = render(hamming_distribution(in.element));
    const auto b = render(hamming_distribution(dual));
    report.line("A=" + a.text + "; A'=" + b.text);
    note_rounding(report, a, b);
    r["A"] = a.machine;
    r["A_dual"] = b.machine;
  } else if (kind == "complete") {
    list_terms(report, r["C"], "complete C", complete_distribution(in.element).terms);
    list_terms(report, r["C_dual"], "complete C'", complete_distribution(dual).terms);
  } else {
    r["delta"] = *in.sys.ordering().lee_delta();
    list_terms(report, r["C"], "lee C", lee_distribution(in.sys, in.element).terms);
    list_terms(report, r["C_dual"], "lee C'", lee_distribution(in.sys, dual).terms);
  }
  report.emit(out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string identity;
  std::size_t trials = 20;
  std::uint64_t seed = 20260101;
  unsigned m = 0;
  std::string random;
  double tolerance = kTolerance;
};

struct RandomShape {
  unsigned m;
  std::size_t n;
  std::size_t k;
};

RandomShape parse_random(const std::string& text) {
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc{} || ptr != text.data() + comma) parts.clear(), pos = text.size() + 1;
    else parts.push_back(value), pos = comma + 1;
  }
  if (parts.size() != 3 || parts[0] < 2) {
    throw Error(ErrorKind::InvalidArgument, "--random expects 'm,n,K' with m >= 2, got '" + text + "'");
  }
  return {static_cast<unsigned>(parts[0]), parts[1], parts[2]};
}

int cmd_verify(const VerifyArgs& args, const Settings& settings, std::ostream& out) {
  const unsigned threads = resolve_threads(settings.threads);
  const std::string& id = args.identity;
  const bool randomized = id == "t4" || id == "t6" || id == "t8";

  Source source;
  std::optional<ElementInput> in;
  std::optional<CodeSpec> random;
  if (!args.input.empty()) {
    source = read_source(args.input);
    in.emplace(element_from(source, threads));
  } else if (!args.random.empty()) {
    const auto shape = parse_random(args.random);
    source.name = "random:" + args.random;
    source.text = source.name + ";seed=" + std::to_string(args.seed);
    random = random_code(shape.m, shape.n, shape.k, args.seed);
    auto sys = build_pauli_system(shape.m);
    auto element = associated_element(sys, *random, {.threads = threads});
    in.emplace(ElementInput{std::move(sys), std::move(element), random});
  } else if (args.m != 0 && (id == "lemma1" || id == "axioms")) {
    source.name = "m=" + std::to_string(args.m);
    source.text = source.name;
  } else {
    throw Error(ErrorKind::InvalidArgument, "verify needs an input file, --random m,n,K, or --m for lemma1/axioms");
  }

  const unsigned m = args.m != 0 ? args.m : in->sys.m();
  const IdentityTestOptions options{.trials = args.trials, .seed = args.seed, .tolerance = args.tolerance};
  CheckReport check;
  if (id == "lemma1" || id == "axioms") {
    const auto sys = in && in->sys.m() == m ? in->sys : build_pauli_system(m);
    check = id == "lemma1" ? verify_lemma1(sys) : oracle::verify_basis_axioms(sys);
  } else if (id == "cs") {
    if (!in->code) throw Error(ErrorKind::InvalidArgument, "--identity cs needs a code, not an element file");
    check = check_cs_ordering(in->sys, *in->code, {.threads = threads});
  } else if (id == "t4") {
    check = verify_exact_identity(in->sys, in->element, options);
  } else if (id == "t6") {
    check = verify_complete_identity(in->sys, in->element, options);
  } else if (id == "t8") {
    check = verify_lee_identity(in->sys, in->element, options);
  } else if (id == "t9") {
    check = verify_hamming_identity(in->sys, in->element, args.tolerance);
  } else {
    check = double_transform_scaling_check(in->sys, in->element);
  }

  Report report("verify", source, settings);
  std::string summary = id + (check.passed ? " pass" : " FAIL") + " max_residual=" + brief(check.max_residual) +
                        " tolerance=" + brief(check.tolerance);
  if (randomized) summary += " trials=" + std::to_string(args.trials) + " seed=" + std::to_string(args.seed);
  if (random) summary += " code_seed=" + std::to_string(args.seed);
  report.line(summary);
  for (std::size_t i = 0; i < std::min(check.violations.size(), kMaxListedViolations); ++i) {
    report.line("  " + check.violations[i]);
  }
  if (check.violations.size() > kMaxListedViolations) {
    report.line("  ... " + std::to_string(check.violations.size() - kMaxListedViolations) + " more");
  }
  auto& r = report.results();
  r["identity"] = id;
  r["check"] = check.name;
  r["passed"] = check.passed;
  r["max_residual"] = check.max_residual;
  r["tolerance"] = check.tolerance;
  if (randomized || random) r["seed"] = args.seed;
  if (randomized) r["trials"] = args.trials;
  r["violations"] = Json(std::vector<std::string>(
      check.violations.begin(),
      check.violations.begin() + static_cast<std::ptrdiff_t>(std::min(check.violations.size(), kMaxListedViolations))));
  r["violation_count"] = check.violations.size();
  report.emit(out);
  return check.passed ? kExitOk : kExitCheckFailed;
}

// ---- transform -------------------------------------------------------------

int cmd_transform(const std::string& input, const std::string& output, const Settings& settings, std::ostream& out) {
  const auto source = read_source(input);
  const unsigned threads = resolve_threads(settings.threads);
  const auto in = element_from(source, threads);
  const auto result = transform(in.sys, in.element, {.threads = threads});
  const auto text = formats::format_element(result.element, in.sys.ordering().name());
  Report report("transform", source, settings);
  report.line("M=" + value_text(result.source_mass) + " c'_0=" + value_text(result.element[0]));
  auto& r = report.results();
  r["m"] = in.sys.m();
  r["n"] = in.element.n();
  r["mass"] = value_json(result.source_mass);
  r["dual_identity_coefficient"] = value_json(result.element[0]);
  r["dual_mass"] = value_json(result.element.mass());
  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    file << text;
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + output + "'");
    report.line("# wrote " + output);
    r["output"] = output;
  } else if (settings.machine()) {
    r["element"] = text;
  } else {
    std::istringstream lines(text);
    for (std::string l; std::getline(lines, l);) report.line(l);
  }
  report.emit(out);
  return kExitOk;
}

// ---- catalog ---------------------------------------------------------------

int cmd_catalog(const std::string& name, const Settings& settings, std::ostream& out) {
  if (name.empty()) {
    Json names = Json::array();
    for (auto n : catalog::names()) names.push_back(std::string(n));
    if (settings.machine()) {
      out << Json{{"tool", "gaqec"}, {"version", std::string(version())}, {"catalog", names}}.dump(2) << '\n';
    } else {
      for (auto n : catalog::names()) out << "catalog:" << n << '\n';
    }
    return kExitOk;
  }
  const auto text = catalog::text(name);
  if (!text) throw Error(ErrorKind::InvalidArgument, "no catalog entry '" + name + "'");
  out << *text;
  return kExitOk;
}

}  // namespace

std::string_view version() noexcept { return GAQEC_VERSION; }

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight enumerators and parameters of quantum codes via group algebras", "gaqec"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  settings.arguments.assign(args.begin(), args.end());
  app.add_option("--format", settings.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--threads", settings.threads, "Worker threads (default: $GAQEC_THREADS, else 1)");
  app.add_flag("--timings", settings.timings, "Include wall-clock timings in the report");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report K, d, purity and both Hamming distributions of a code");
  analyze_cmd->add_option("input", input, "Code file or catalog:<name>")->required();

  std::string kind = "hamming";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Print a weight distribution of C and of its dual C'");
  enumerate_cmd->add_option("input", input, "Code or element file, or catalog:<name>")->required();
  enumerate_cmd->add_option("--kind", kind, "Distribution to print")
      ->check(CLI::IsMember({"complete", "lee", "hamming"}))
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity or law; exit code 1 when it fails");
  verify_cmd->add_option("input", verify.input, "Code or element file, or catalog:<name>");
  verify_cmd->add_option("--identity", verify.identity, "Check to run")
      ->required()
      ->check(CLI::IsMember({"t4", "t6", "t8", "t9", "lemma1", "axioms", "cs", "double"}));
  verify_cmd->add_option("--trials", verify.trials, "Random evaluation points")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for evaluation points and random codes")->capture_default_str();
  verify_cmd->add_option("--m", verify.m, "Level count for lemma1/axioms");
  verify_cmd->add_option("--random", verify.random, "Use a random code 'm,n,K' drawn with --seed");
  verify_cmd->add_option("--tolerance", verify.tolerance, "Residual tolerance")->capture_default_str();

  std::string output;
  auto* transform_cmd = app.add_subcommand("transform", "Write the normalized transform of an element");
  transform_cmd->add_option("input", input, "Element or code file, or catalog:<name>")->required();
  transform_cmd->add_option("-o,--output", output, "Destination element file");

  std::string entry;
  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in codes, or print one");
  catalog_cmd->add_option("name", entry, "Entry to print");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, settings, out);
    if (*enumerate_cmd) return cmd_enumerate(input, kind, settings, out);
    if (*verify_cmd) return cmd_verify(verify, settings, out);
    if (*transform_cmd) return cmd_transform(input, output, settings, out);
    return cmd_catalog(entry, settings, out);
  } catch (const std::exception& e) {
    err << "gaqec: error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace gaqec::cli
