// frescos: command-line front end for the fresco engine.
//
//   frescos analyze -i "fresco: (5/2 | 1 + 3b^2) (7/2 | 1)"
//   frescos xi -i "s^(-1/2) * log" --format text
//   frescos verify --samples 20 --seed 7
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frescos/dsl.hpp"
#include "frescos/json_io.hpp"
#include "frescos/report.hpp"
#include "frescos/verify.hpp"

using namespace frescos;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kVerify = 3 };

struct Settings {
  std::string command;
  std::string inline_input;
  std::string file;
  std::optional<int> order;
  std::optional<int> depth;
  std::string format = "json";
  unsigned long seed = 1;
  int samples = 20;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json report;
  int code = kOk;
};

std::string read_input(const Settings& s, bool required) {
  if (!s.inline_input.empty()) return s.inline_input;
  if (!s.file.empty()) {
    std::ifstream in(s.file);
    if (!in) throw UsageError("cannot read " + s.file);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  if (!required) return {};
  return {std::istreambuf_iterator<char>(std::cin), {}};
}

/// Parses one line, raising the series order to the required bound unless
/// the user fixed it.
Payload parse_line(const SourceLine& src, const Settings& s) {
  DslOptions opt;
  opt.order = s.order.value_or(64);
  opt.max_shift = s.depth.value_or(32);
  Payload payload = parse_dsl(src.text, opt, src.line);
  if (auto* p = std::get_if<Presentation>(&payload)) {
    int need = required_order(*p);
    if (s.order && *s.order < need)
      throw UsageError("line " + std::to_string(src.line) + ": --order " + std::to_string(*s.order) +
                       " is below the required " + std::to_string(need));
    if (!s.order && opt.order < need) {
      opt.order = need;
      payload = parse_dsl(src.text, opt, src.line);
    }
  }
  return payload;
}

Presentation as_presentation(const Payload& payload) {
  if (const auto* p = std::get_if<Presentation>(&payload)) return *p;
  return model_from_xi(xi_generate_module(std::get<XiExpansion>(payload)));
}

VerifyOptions verify_options(const Settings& s, int order) {
  int depth = s.depth.value_or(std::min(32, order + 1));
  if (depth > order + 1)
    throw UsageError("--oracle-depth " + std::to_string(depth) + " needs series order at least " + std::to_string(depth - 1));
  return {s.samples, order, depth};
}

Outcome run_line(const SourceLine& src, const Settings& s, Rng& rng) {
  Payload payload = parse_line(src, s);
  const std::string& c = s.command;
  if (c == "xi") {
    const auto* x = std::get_if<XiExpansion>(&payload);
    if (!x) throw UsageError("line " + std::to_string(src.line) + ": xi expects an expansion such as s^(-1/2) * log");
    return {xi_report(*x)};
  }
  Presentation p = as_presentation(payload);
  if (c == "analyze") return {analyze_report(p)};
  if (c == "alpha") return {alpha_report(p)};
  if (c == "ss") return {ss_report(p)};
  if (c == "subtheme") return {subtheme_report(p)};
  // verify with an input
  SuiteResult r = verify_presentation(p, rng, verify_options(s, p.order()));
  return {suite_json(r), r.ok() ? kOk : kVerify};
}

Outcome run_suites(const Settings& s, Rng& rng) {
  VerifyOptions opt = verify_options(s, s.order.value_or(32));
  std::vector<SuiteResult> suites{verify_commutation(rng, opt), verify_bernstein(rng, opt),   verify_exchange(rng, opt),
                                  verify_rank2_invariance(rng, opt), verify_rank3(rng, opt), verify_semisimplicity(rng, opt),
                                  verify_oracle(rng, opt),     verify_xi_themes(opt),        verify_codimension(rng, opt),
                                  verify_rank2_kernel(rng, opt)};
  Json list = Json::array();
  int passed = 0, failed = 0;
  for (const auto& r : suites) {
    list.push_back(suite_json(r));
    passed += r.passed;
    failed += r.failed;
  }
  bool ok = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.ok(); });
  return {Json{{"ok", ok}, {"passed", passed}, {"failed", failed}, {"suites", list}}, ok ? kOk : kVerify};
}

Outcome failure(const Error& e, int line) {
  Json j = detail::error_json(e);
  if (line > 0) j["line"] = line;
  bool usage = e.kind() == ErrorKind::SyntaxError;
  return {j, usage ? kUsage : kDomain};
}

void emit(const Json& report, const Settings& s) {
  if (s.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_text(report);
}

int execute(const Settings& s) {
  Rng rng(s.seed);
  const bool needs_input = s.command != "verify" && s.command != "identities";
  std::string text = read_input(s, needs_input);

  if (s.command == "identities") {
    Json report = identities_report(rng, s.samples, s.order.value_or(32));
    report["seed"] = s.seed;
    emit(report, s);
    return report["all_hold"].get<bool>() ? kOk : kVerify;
  }

  std::vector<SourceLine> lines = request_lines(text);
  if (s.command == "verify" && lines.empty()) {
    Outcome o = run_suites(s, rng);
    o.report["seed"] = s.seed;
    emit(o.report, s);
    return o.code;
  }
  if (lines.empty()) throw UsageError("no input");

  std::vector<Json> reports;
  int code = kOk;
  for (const auto& src : lines) {
    Outcome o;
    try {
      o = run_line(src, s, rng);
    } catch (const Error& e) {
      o = failure(e, src.line);
    }
    o.report["seed"] = s.seed;
    reports.push_back(std::move(o.report));
    code = std::max(code, o.code);
  }
  if (reports.size() == 1)
    emit(reports.front(), s);
  else if (s.format == "json")
    emit(Json(reports), s);
  else
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) std::cout << "\n";
      emit(reports[i], s);
    }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of frescos, themes and their invariants"};
  app.require_subcommand(1, 1);
  Settings s;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "Invariants: lambdas, p_j, mu, Bernstein roots, flags and alpha"},
      {"alpha", "alpha invariant, semi-simplicity and theme classes"},
      {"ss", "Semi-simplicity test"},
      {"subtheme", "Rank-2 sub-theme and quotient theme classes"},
      {"xi", "Module generated by an expansion in Xi and its presentation"},
      {"verify", "Oracle cross-checks on the input, or the randomized suites without input"},
      {"identities", "Exchange and commutation identity report"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", s.inline_input, "Inline DSL input, one request per line");
    sub->add_option("-f,--file", s.file, "Read DSL input from a file")->check(CLI::ExistingFile);
    sub->add_option("--order", s.order, "Series truncation N")->check(CLI::Range(2, 4096));
    sub->add_option("--oracle-depth", s.depth, "Oracle depth M")->check(CLI::Range(4, 4096));
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", s.seed, "Seed for randomized checks");
    sub->add_option("--samples", s.samples, "Sample count for randomized checks")->check(CLI::Range(1, 100000));
    sub->callback([&s, name = name] { s.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return execute(s);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SyntaxError ? kUsage : kDomain;
  }
}
