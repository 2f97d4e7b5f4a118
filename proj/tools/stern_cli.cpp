// Command-line front end: computes Stern polynomials, Stern values,
// hyperbinary expansions, binary digit reversals and run profiles, and
// runs the identity checkers over index ranges.
//
// Exit codes: 0 success / property verified, 1 property falsified,
// 2 usage error or unsupported input.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stern/all.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json poly_to_json(const stern::BiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const stern::Term& t : p.terms()) {
    // Coefficients travel as decimal strings so consumers never round.
    terms.push_back({{"i", t.i}, {"j", t.j}, {"c", std::to_string(t.c)}});
  }
  return ordered_json{{"terms", std::move(terms)}};
}

ordered_json report_to_json(const stern::VerifyReport& rep) {
  ordered_json failures = ordered_json::array();
  for (const stern::Failure& f : rep.failures) {
    failures.push_back(
        {{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return ordered_json{{"checked", rep.checked},
                      {"failures", std::move(failures)},
                      {"elapsed_ms", rep.elapsed.count()}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& subcommand) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw CLI::ValidationError("--format", "format '" + format + "' is not supported by '" +
                                             subcommand + "'");
}

int cmd_poly(std::uint64_t n, const std::string& format) {
  require_format(format, {"text", "json"}, "poly");
  const stern::BiPoly p = stern::stern_poly(n);
  if (format == "json") {
    std::cout << poly_to_json(p).dump() << '\n';
  } else {
    std::cout << stern::canonical_text(p) << '\n';
  }
  return 0;
}

int cmd_value(std::uint64_t n, const std::string& format) {
  require_format(format, {"text", "json"}, "value");
  std::cout << stern::stern_value(n) << '\n';
  return 0;
}

int cmd_expansions(std::uint64_t m, const std::string& format) {
  require_format(format, {"text", "json"}, "expansions");
  const std::vector<stern::HyperExpansion> all = stern::enumerate_expansions(m);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const stern::HyperExpansion& e : all) arr.push_back(stern::to_string(e));
    std::cout << arr.dump() << '\n';
  } else {
    for (const stern::HyperExpansion& e : all) std::cout << stern::to_string(e) << '\n';
    std::cout << "count: " << all.size() << '\n';
  }
  return 0;
}

int cmd_reverse(std::uint64_t n, const std::string& format) {
  require_format(format, {"text", "json"}, "reverse");
  std::cout << stern::reverse(n) << '\n';
  return 0;
}

int cmd_runs(std::uint64_t n, const std::string& format) {
  require_format(format, {"text", "json"}, "runs");
  const stern::RunProfile profile = stern::runs(n);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const std::uint32_t k : profile.runs) arr.push_back(k);
    std::cout << arr.dump() << '\n';
  } else {
    bool first = true;
    for (const std::uint32_t k : profile.runs) {
      if (!first) std::cout << ' ';
      first = false;
      std::cout << k;
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_table(std::uint64_t max, const std::string& format) {
  // The table is inherently tabular: text and csv render the same way.
  require_format(format, {"text", "csv", "json"}, "table");
  ordered_json rows = ordered_json::array();
  if (format != "json") {
    std::cout << "n,n_reversed,stern_value,polynomial,num_expansions\n";
  }
  for (std::uint64_t n = 1; n <= max; ++n) {
    const std::uint64_t reversed = stern::reverse(n);
    const std::uint64_t value = stern::stern_value(n);
    const std::string poly = stern::canonical_text(stern::stern_poly(n));
    const std::uint64_t expansions = stern::enumerate_expansions(n - 1).size();
    if (format == "json") {
      rows.push_back({{"n", n},
                      {"n_reversed", reversed},
                      {"stern_value", value},
                      {"polynomial", poly},
                      {"num_expansions", expansions}});
    } else {
      std::cout << n << ',' << reversed << ',' << value << ',' << csv_quote(poly) << ','
                << expansions << '\n';
    }
  }
  if (format == "json") std::cout << rows.dump() << '\n';
  return 0;
}

struct VerifyArgs {
  std::string target;
  std::string mode = "polynomial";
  std::uint64_t min = 1;
  std::uint64_t max = 0;  // 0 = use the per-target default
  unsigned workers = 1;
  std::size_t fail_limit = stern::kDefaultFailLimit;
};

int cmd_verify(const VerifyArgs& args, const std::string& format) {
  require_format(format, {"text", "json"}, "verify");
  const stern::CheckOptions opt{args.workers, args.fail_limit};
  stern::VerifyReport rep;
  if (args.target == "reversal") {
    const bool integer = args.mode == "integer";
    const std::uint64_t max = args.max ? args.max : (integer ? 10'000'000 : 65'536);
    rep = stern::check_reversal_range(
        args.min, max,
        integer ? stern::ReversalMode::integer : stern::ReversalMode::polynomial, opt);
  } else if (args.target == "lemma") {
    rep = stern::check_lemma_identities(opt);
  } else if (args.target == "oracle") {
    rep = stern::check_oracle_equivalence(args.min, args.max ? args.max : 4096, opt);
  } else if (args.target == "continuant") {
    rep = stern::check_continuant_range(args.min, args.max ? args.max : 100'000, opt);
  } else if (args.target == "powers") {
    rep = stern::check_power_of_two_clause(args.max ? args.max : 65'536, opt);
  } else if (args.target == "reflection") {
    const std::uint64_t len = args.max ? args.max : 12;
    if (len > 24) throw CLI::ValidationError("--max", "reflection word length is capped at 24");
    rep = stern::check_reflection_range(static_cast<unsigned>(len), opt);
  } else {
    throw CLI::ValidationError("target", "unknown verify target '" + args.target + "'");
  }
  if (format == "json") {
    std::cout << report_to_json(rep).dump() << '\n';
  } else {
    std::cout << stern::render_text(rep);
  }
  std::cerr << "elapsed: " << rep.elapsed.count() << " ms\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate Stern polynomials, hyperbinary expansions and digit-reversal checks"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::uint64_t poly_n = 0;
  CLI::App* poly = app.add_subcommand("poly", "Print the Stern polynomial s_n(x,y)");
  poly->add_option("n", poly_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);

  std::uint64_t value_n = 0;
  CLI::App* value = app.add_subcommand("value", "Print the Stern sequence value s_n(1,1)");
  value->add_option("n", value_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);

  std::uint64_t expansions_m = 0;
  CLI::App* expansions =
      app.add_subcommand("expansions", "List the proper hyperbinary expansions of m");
  expansions->add_option("m", expansions_m, "Value m >= 0")->required();

  std::uint64_t reverse_n = 0;
  CLI::App* reverse = app.add_subcommand("reverse", "Print the binary digit reversal of n");
  reverse->add_option("n", reverse_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);

  std::uint64_t runs_n = 0;
  CLI::App* runs = app.add_subcommand("runs", "Print the run profile of odd n, MSB-first");
  runs->add_option("n", runs_n, "Odd index n >= 1")->required()->check(CLI::PositiveNumber);

  std::uint64_t table_max = 0;
  CLI::App* table =
      app.add_subcommand("table", "Tabulate n, n^R, s_n(1,1), s_n(x,y) and expansion counts");
  table->add_option("--max", table_max, "Largest index, inclusive")
      ->required()
      ->check(CLI::PositiveNumber);

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "Check an identity over a range");
  verify->add_option("target", vargs.target, "One of: reversal, lemma, oracle, continuant, powers, reflection")
      ->required()
      ->check(CLI::IsMember({"reversal", "lemma", "oracle", "continuant", "powers", "reflection"}));
  verify->add_option("--mode", vargs.mode, "reversal only: compare polynomials or integers")
      ->check(CLI::IsMember({"polynomial", "integer"}))
      ->capture_default_str();
  verify->add_option("--min", vargs.min, "First index")->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--max", vargs.max,
                     "Last index (reflection: maximum word length); defaults per target");
  verify->add_option("--workers", vargs.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--fail-limit", vargs.fail_limit, "Failures kept in the report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  for (CLI::App* sub : {poly, value, expansions, reverse, runs, table, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
    if (*poly) return cmd_poly(poly_n, format);
    if (*value) return cmd_value(value_n, format);
    if (*expansions) return cmd_expansions(expansions_m, format);
    if (*reverse) return cmd_reverse(reverse_n, format);
    if (*runs) return cmd_runs(runs_n, format);
    if (*table) return cmd_table(table_max, format);
    if (*verify) return cmd_verify(vargs, format);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
