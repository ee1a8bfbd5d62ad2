// arithterm: evaluate arithmetic terms, compute the closed-form coefficient
// formulas against their brute-force oracles, and benchmark Kronecker
// multiplication.
//
// Exit status: 0 on success, 1 on a syntax or domain error, 2 when a
// verification (--check / check) finds a mismatch.

#include <arithterm/arithterm.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace arithterm;
using nlohmann::json;

namespace {

Env parse_bindings(const std::vector<std::string>& lets) {
  Env env;
  for (const std::string& binding : lets) {
    auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0)
      throw DomainError("--let expects name=value, got '" + binding + "'");
    env[binding.substr(0, eq)] =
        Natural::from_decimal(binding.substr(eq + 1));
  }
  return env;
}

Polynomial parse_coeff_list(const std::string& text) {
  std::vector<Natural> cs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    cs.push_back(Natural::from_decimal(
        std::string_view(text).substr(pos, end - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Polynomial(std::move(cs));
}

int cmd_eval(const std::string& term_text,
             const std::vector<std::string>& lets) {
  std::cout << eval(parse(term_text), parse_bindings(lets)) << "\n";
  return 0;
}

struct ComputeFlags {
  std::optional<std::string> n, j, k, s, r, c;
  std::optional<std::string> coeffs;
  bool check = false;
  bool emit_term = false;
  bool as_json = false;
};

const std::optional<std::string>& compute_flag(const ComputeFlags& flags,
                                               const std::string& name) {
  if (name == "n") return flags.n;
  if (name == "j") return flags.j;
  if (name == "k") return flags.k;
  if (name == "s") return flags.s;
  if (name == "r") return flags.r;
  if (name == "c") return flags.c;
  throw DomainError("no flag for parameter '" + name + "'");
}

int report_compute(const std::string& name, const json& params_json,
                   const Natural& value, bool checked, bool match,
                   const TermPtr& term, const ComputeFlags& flags) {
  if (flags.as_json) {
    json out{
        {"name", name},
        {"params", params_json},
        {"value", value.str()},
        {"checked", checked ? json(match) : json(nullptr)},
        {"term_size", term ? json(term_size(term)) : json(nullptr)},
    };
    std::cout << out.dump() << "\n";
  } else if (flags.emit_term) {
    if (!term)
      throw NoTermError("'" + name + "' is not an arithmetic term");
    std::cout << to_string(term) << "\n";
  } else {
    std::cout << value << "\n";
  }
  if (checked && !match) {
    std::cerr << "check failed: formula value disagrees with the oracle\n";
    return 2;
  }
  return 0;
}

int compute_digit_extract(const ComputeFlags& flags) {
  if (!flags.coeffs || !flags.k || !flags.c)
    throw DomainError(
        "digit_extract needs --coeffs <c0,c1,...>, --k <index> and --c "
        "<base>");
  Polynomial f = parse_coeff_list(*flags.coeffs);
  std::size_t k = Natural::from_decimal(*flags.k).to_uint64();
  Natural c = Natural::from_decimal(*flags.c);
  Natural value = formulas::digit_extract(f, k, c);

  bool match = true;
  if (flags.check) match = value == f.coeff(k);

  // the extraction instance is itself an arithmetic term: f(c) / c^k % c
  TermPtr term = Term::constant(f.eval_at(c)) /
                     pow(Term::constant(c), Term::constant(Natural(k))) %
                 Term::constant(c);
  json params{{"coeffs", *flags.coeffs}, {"k", *flags.k}, {"c", *flags.c}};
  return report_compute("digit_extract", params, value, flags.check, match,
                        term, flags);
}

int cmd_compute(const std::string& name, const ComputeFlags& flags) {
  if (name == "digit_extract") return compute_digit_extract(flags);

  const formulas::FormulaSpec& spec = formulas::require_formula(name);
  formulas::Params params;
  json params_json = json::object();
  for (const std::string& p : spec.params) {
    const auto& slot = compute_flag(flags, p);
    if (!slot)
      throw DomainError("missing --" + p + " for formula '" + name + "'");
    params[p] = Natural::from_decimal(*slot);
    params_json[p] = *slot;
  }
  for (const char* other : {"n", "j", "k", "s", "r", "c"}) {
    if (compute_flag(flags, other) &&
        std::find(spec.params.begin(), spec.params.end(), other) ==
            spec.params.end())
      throw DomainError("formula '" + name + "' takes no parameter --" +
                        other);
  }

  Natural value = spec.evaluate(params);
  bool match = true;
  if (flags.check) match = value == spec.oracle(params);

  TermPtr term;
  if (spec.has_term) term = formulas::build_term(name, params);
  return report_compute(name, params_json, value, flags.check, match, term,
                        flags);
}

int cmd_check(const std::optional<std::string>& formula, unsigned max_n,
              bool as_json, const std::optional<std::string>& corrupt) {
  auto run_suite = [&](const std::string& name) {
    if (corrupt && *corrupt == name) {
      formulas::FormulaSpec bad = formulas::require_formula(name);
      auto inner = bad.evaluate;
      bad.evaluate = [inner](const formulas::Params& p) {
        return inner(p) + 1;
      };
      return verify::check_formula(bad, max_n);
    }
    return verify::check_one(name, max_n);
  };

  std::vector<std::string> names;
  if (formula) {
    names.push_back(*formula);
  } else {
    names.emplace_back("digit_extract");
    for (const auto& spec : formulas::catalog()) names.push_back(spec.name);
  }

  std::vector<verify::SuiteResult> results;
  results.reserve(names.size());
  for (const auto& name : names) results.push_back(run_suite(name));

  std::size_t total_cases = 0, total_failures = 0;
  for (const auto& res : results) {
    total_cases += res.cases;
    total_failures += res.failures;
  }

  if (as_json) {
    json suites = json::array();
    for (const auto& res : results)
      suites.push_back(json{{"name", res.name},
                            {"cases", res.cases},
                            {"failures", res.failures}});
    std::cout << json{{"suites", suites},
                      {"total_cases", total_cases},
                      {"total_failures", total_failures},
                      {"ok", total_failures == 0}}
                     .dump()
              << "\n";
  } else {
    for (const auto& res : results) {
      printf("%-22s %7zu cases  %s\n", res.name.c_str(), res.cases,
             res.ok() ? "ok" : "FAIL");
      for (const auto& sample : res.samples)
        printf("    %s\n", sample.c_str());
    }
    printf("%zu suites, %zu cases, %zu failures\n", results.size(),
           total_cases, total_failures);
  }
  return total_failures == 0 ? 0 : 2;
}

int cmd_bench_kron(std::size_t degree, unsigned bits, std::size_t trials,
                   std::uint64_t seed, bool as_json) {
  kron::BenchReport report = kron::bench_multiply(degree, bits, trials, seed);
  double speedup = report.kron_seconds > 0.0
                       ? report.naive_seconds / report.kron_seconds
                       : 0.0;
  if (as_json) {
    std::cout << json{{"degree", report.degree},
                      {"coeff_bits", report.coeff_bits},
                      {"trials", report.trials},
                      {"seed", report.seed},
                      {"base_bits", report.base_bits},
                      {"packed_bits", report.packed_bits},
                      {"naive_seconds", report.naive_seconds},
                      {"kron_seconds", report.kron_seconds},
                      {"speedup", speedup},
                      {"products_equal", report.products_equal}}
                     .dump()
              << "\n";
  } else {
    printf("degree:          %zu\n", report.degree);
    printf("coeff bits:      %u\n", report.coeff_bits);
    printf("trials:          %zu\n", report.trials);
    printf("seed:            %llu\n",
           static_cast<unsigned long long>(report.seed));
    printf("base bits:       %zu\n", report.base_bits);
    printf("packed bits:     %zu\n", report.packed_bits);
    printf("naive seconds:   %.6f\n", report.naive_seconds);
    printf("kron seconds:    %.6f\n", report.kron_seconds);
    printf("speedup:         %.2fx\n", speedup);
    printf("products equal:  %s\n", report.products_equal ? "yes" : "no");
  }
  return report.products_equal ? 0 : 2;
}

formulas::Params bench_slice(const std::string& name, std::uint64_t n) {
  if (name == "binomial")
    return {{"n", Natural(n)}, {"k", Natural(n / 2)}};
  if (name == "partial_sum")
    return {{"n", Natural(n)}, {"j", Natural(n - 2)}};
  if (name == "partial_sum_boardman")
    return {{"n", Natural(n)}, {"j", Natural(n)}};
  if (name == "multisection")
    return {{"n", Natural(n)}, {"s", Natural(2)}, {"j", Natural(0)}};
  if (name == "poly_coefficient")
    return {{"n", Natural(n)}, {"r", Natural(3)}, {"k", Natural(n)}};
  if (name == "poly_partial_sum")
    return {{"n", Natural(n)}, {"r", Natural(3)}, {"j", Natural(2 * n - 2)}};
  return {{"n", Natural(n)}};  // central_trinomial
}

std::uint64_t bench_first_n(const std::string& name) {
  return (name == "partial_sum" || name == "multisection") ? 2 : 1;
}

int cmd_bench_formula(const std::string& name, std::uint64_t max_n,
                      bool as_json) {
  const formulas::FormulaSpec& spec = formulas::require_formula(name);
  using clock = std::chrono::steady_clock;
  json rows = json::array();
  if (!as_json) printf("%10s %14s %10s\n", "n", "seconds", "bits");
  for (std::uint64_t n = bench_first_n(name); n <= max_n; ++n) {
    formulas::Params params = bench_slice(name, n);
    auto t0 = clock::now();
    Natural value = spec.evaluate(params);
    auto t1 = clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    if (as_json)
      rows.push_back(json{{"n", n},
                          {"seconds", seconds},
                          {"value_bits", value.bit_length()}});
    else
      printf("%10llu %14.6f %10zu\n", static_cast<unsigned long long>(n),
             seconds, value.bit_length());
  }
  if (as_json)
    std::cout << json{{"name", name}, {"max_n", max_n}, {"rows", rows}}.dump()
              << "\n";
  return 0;
}

int cmd_list(bool as_json) {
  if (as_json) {
    json out = json::array();
    out.push_back(
        json{{"name", "digit_extract"},
             {"params", json::array({"coeffs", "k", "c"})},
             {"domain", "0 <= k <= deg f, coefficients of index <= k below c"},
             {"summary", "coefficient [x^k] f(x), recovered from the single "
                         "value f(c)"},
             {"term", "f(c) / c^k % c"}});
    for (const auto& spec : formulas::catalog())
      out.push_back(json{
          {"name", spec.name},
          {"params", spec.params},
          {"domain", spec.domain},
          {"summary", spec.summary},
          {"term", spec.has_term ? json(to_string(spec.term())) : json(nullptr)},
      });
    std::cout << out.dump() << "\n";
    return 0;
  }

  printf("digit_extract(coeffs, k, c)\n");
  printf("  coefficient [x^k] f(x), recovered from the single value f(c)\n");
  printf("  domain: 0 <= k <= deg f, coefficients of index <= k below c\n");
  printf("  term:   f(c) / c^k %% c\n");
  for (const auto& spec : formulas::catalog()) {
    std::string params;
    for (const auto& p : spec.params) {
      if (!params.empty()) params += ", ";
      params += p;
    }
    printf("%s(%s)\n", spec.name.c_str(), params.c_str());
    printf("  %s\n", spec.summary.c_str());
    printf("  domain: %s\n", spec.domain.c_str());
    if (spec.has_term)
      printf("  term:   %s\n", to_string(spec.term()).c_str());
    else
      printf("  term:   none (signed expression; not an arithmetic term)\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic-term toolkit"};
  app.require_subcommand(1);

  // eval
  std::string term_text;
  std::vector<std::string> lets;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a term under optional bindings");
  eval_cmd->add_option("term", term_text, "term source text")->required();
  eval_cmd->add_option("--let", lets, "bind a variable, e.g. --let n=4");

  // compute
  std::string formula_name;
  ComputeFlags flags;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "evaluate a catalog formula");
  compute_cmd->add_option("name", formula_name, "formula name (see `list`)")
      ->required();
  compute_cmd->add_option("--n", flags.n, "parameter n");
  compute_cmd->add_option("--j", flags.j, "parameter j");
  compute_cmd->add_option("--k", flags.k, "parameter k");
  compute_cmd->add_option("--s", flags.s, "parameter s");
  compute_cmd->add_option("--r", flags.r, "parameter r");
  compute_cmd->add_option("--c", flags.c, "extraction base (digit_extract)");
  compute_cmd->add_option("--coeffs", flags.coeffs,
                          "comma-separated coefficients (digit_extract)");
  compute_cmd->add_flag("--check", flags.check,
                        "also run the brute-force oracle; exit 2 on mismatch");
  compute_cmd->add_flag("--emit-term", flags.emit_term,
                        "print the built arithmetic term instead of the value");
  compute_cmd->add_flag("--json", flags.as_json, "machine-readable output");

  // check
  std::optional<std::string> check_formula_name;
  unsigned check_max_n = 0;
  bool check_json = false;
  std::optional<std::string> corrupt;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "verify formulas against their oracles over parameter grids");
  check_cmd->add_option("--formula", check_formula_name,
                        "check a single formula");
  check_cmd->add_flag("--all", "check everything (the default)");
  check_cmd->add_option("--max-n", check_max_n,
                        "override the default grid bound on n");
  check_cmd->add_flag("--json", check_json, "machine-readable output");
  check_cmd->add_option("--selftest-corrupt", corrupt,
                        "perturb the named formula to exercise the harness")
      ->group("");  // hidden; exists for the test suite

  // bench
  CLI::App* bench_cmd = app.add_subcommand("bench", "timing harnesses");
  bench_cmd->require_subcommand(1);

  std::size_t bench_degree = 64;
  unsigned bench_bits = 20;
  std::size_t bench_trials = 10;
  std::uint64_t bench_seed = 1;
  bool bench_kron_json = false;
  CLI::App* bench_kron_cmd = bench_cmd->add_subcommand(
      "kron", "naive convolution vs Kronecker-substitution multiply");
  bench_kron_cmd->add_option("--degree", bench_degree, "operand degree");
  bench_kron_cmd->add_option("--bits", bench_bits, "coefficient bits");
  bench_kron_cmd->add_option("--trials", bench_trials, "number of trials");
  bench_kron_cmd->add_option("--seed", bench_seed, "RNG seed");
  bench_kron_cmd->add_flag("--json", bench_kron_json,
                           "machine-readable output");

  std::string bench_formula_name;
  std::uint64_t bench_max_n = 50;
  bool bench_formula_json = false;
  CLI::App* bench_formula_cmd =
      bench_cmd->add_subcommand("formula", "time a formula across n");
  bench_formula_cmd->add_option("name", bench_formula_name, "formula name")
      ->required();
  bench_formula_cmd->add_option("--max-n", bench_max_n, "largest n to time");
  bench_formula_cmd->add_flag("--json", bench_formula_json,
                              "machine-readable output");

  // list
  bool list_json = false;
  CLI::App* list_cmd =
      app.add_subcommand("list", "list the formula catalog");
  list_cmd->add_flag("--json", list_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(term_text, lets);
    if (compute_cmd->parsed()) return cmd_compute(formula_name, flags);
    if (check_cmd->parsed())
      return cmd_check(check_formula_name, check_max_n, check_json, corrupt);
    if (bench_kron_cmd->parsed())
      return cmd_bench_kron(bench_degree, bench_bits, bench_trials,
                            bench_seed, bench_kron_json);
    if (bench_formula_cmd->parsed())
      return cmd_bench_formula(bench_formula_name, bench_max_n,
                               bench_formula_json);
    if (list_cmd->parsed()) return cmd_list(list_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
