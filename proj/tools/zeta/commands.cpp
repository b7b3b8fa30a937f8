#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "zeta/errors.hpp"
#include "zeta/exact/exact_zeta.hpp"
#include "zeta/oracle/bernoulli.hpp"
#include "zeta/oracle/dirichlet.hpp"
#include "zeta/numeric/polygamma.hpp"
#include "zeta/numeric/render.hpp"

namespace zeta::cli {
namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto timed(F&& f, Milliseconds& elapsed) {
  const auto start = Clock::now();
  auto value = f();
  elapsed = Clock::now() - start;
  return value;
}

// "1.2020569031595942853…" followed by the bound.
std::string describe(const BigFloat& x) {
  std::ostringstream os;
  os << x.to_string(x.accurate_digits()) << "… (error <= " << x.error_bound() << ")";
  return os.str();
}

std::string magnitude_string(const ErrorBound& b) {
  std::ostringstream os;
  os << b;
  return os.str();
}

void print_line(std::ostream& out, const std::string& line) { out << line << std::endl; }

int cmd_even(long s, long precision_bits, bool numeric, bool verify, std::ostream& out) {
  if (s < 1) throw UsageError("even: s must be >= 1 (prints zeta(2s))");
  const auto k = static_cast<unsigned>(s);
  const exact::PiPower value = exact::zeta_even_exact(k);
  print_line(out, "zeta(" + std::to_string(2 * s) + ") = " + exact::to_string(value));
  if (numeric) {
    const BigFloat rendered = numeric::render_pi_power(value, precision_bits);
    print_line(out, "zeta(" + std::to_string(2 * s) + ") ≈ " + describe(rendered));
  }
  if (verify) {
    const exact::PiPower reference = oracle::zeta_even_bernoulli(k);
    if (reference != value) {
      print_line(out, "verify=mismatch (bernoulli oracle: " + exact::to_string(reference) + ")");
      return kExitVerifyFailed;
    }
    print_line(out, "verify=ok (bernoulli oracle: " + exact::to_string(reference) + ")");
  }
  return kExitOk;
}

int cmd_any(long s, long precision_bits, bool show_parts, bool verify, std::ostream& out) {
  if (s < 2) {
    throw UsageError(s == 1 ? "any: zeta has a pole at s = 1" : "any: s must be >= 2");
  }
  const std::string label = "zeta(" + std::to_string(s) + ")";
  const numeric::PolygammaParts parts = numeric::polygamma_parts(s, precision_bits);
  const BigFloat value = numeric::zeta_via_polygamma(s, precision_bits);
  print_line(out, label + " ≈ " + describe(value));
  if (show_parts) {
    const std::string order = "psi^(" + std::to_string(s - 1) + ")";
    print_line(out, order + "(1/4) ≈ " + describe(parts.at_one_quarter));
    print_line(out, order + "(3/4) ≈ " + describe(parts.at_three_quarters));
  }
  if (verify) {
    bool ok = true;
    std::string detail;
    const BigFloat reference = oracle::zeta_dirichlet(s, precision_bits);
    ok = agree(value, reference);
    detail = "dirichlet discrepancy <= " + magnitude_string(discrepancy(value, reference));
    if (s % 2 == 0) {
      const BigFloat closed =
          numeric::render_pi_power(exact::zeta_even_exact(static_cast<unsigned>(s / 2)), precision_bits);
      ok = ok && agree(value, closed);
      detail += ", exact discrepancy <= " + magnitude_string(discrepancy(value, closed));
    }
    print_line(out, std::string(ok ? "verify=ok (" : "verify=mismatch (") + detail + ")");
    if (!ok) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_table(long max_s, long precision_bits, TableFormat format, std::ostream& out) {
  if (max_s < 2) throw UsageError("table: max_s must be >= 2");
  render_table(build_table(max_s, precision_bits), format, out);
  if (!out) {
    throw std::runtime_error("table: failed writing output");
  }
  return kExitOk;
}

int cmd_check(long max_s, long precision_bits, std::ostream& out) {
  if (max_s < 2) throw UsageError("check: max_s must be >= 2");
  const auto outcomes = run_checks(max_s, precision_bits);
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    if (o.passed) {
      print_line(out, "PASS " + o.name);
    } else {
      ++failed;
      print_line(out, "FAIL " + o.name + ": first failing s=" + std::to_string(o.first_failing_s) +
                          ", discrepancy " + o.discrepancy);
    }
  }
  print_line(out, failed == 0 ? "all checks passed"
                              : std::to_string(failed) + " of " + std::to_string(outcomes.size()) +
                                    " checks failed");
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

CheckOutcome named_check(std::string name) {
  CheckOutcome c;
  c.name = std::move(name);
  return c;
}

std::string csv_field(const std::optional<std::string>& v) { return v.value_or(""); }

}  // namespace

std::optional<long> default_precision() {
  const char* env = std::getenv("ZETA_DEFAULT_PREC");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  const std::string_view text(env);
  long bits = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
  if (ec != std::errc{} || ptr != text.data() + text.size() || bits <= 0) return std::nullopt;
  return bits;
}

std::vector<ZetaResult> build_table(long max_s, long precision_bits) {
  std::vector<ZetaResult> rows;
  for (long s = 2; s <= max_s; ++s) {
    ZetaResult row;
    row.argument = s;
    const auto start = Clock::now();
    if (s % 2 == 0) {
      row.kind = ResultKind::kExact;
      row.pipeline = Pipeline::kCotangent;
      row.exact_value = exact::zeta_even_exact(static_cast<unsigned>(s / 2));
      row.numeric_value = numeric::render_pi_power(*row.exact_value, precision_bits);
    } else {
      row.kind = ResultKind::kNumeric;
      row.pipeline = Pipeline::kPolygamma;
      row.numeric_value = numeric::zeta_via_polygamma(s, precision_bits);
    }
    row.elapsed = Clock::now() - start;
    rows.push_back(std::move(row));
  }
  return rows;
}

void render_table(const std::vector<ZetaResult>& rows, TableFormat format, std::ostream& out) {
  switch (format) {
    case TableFormat::kJson: {
      Json array = Json::array();
      for (const auto& row : rows) array.push_back(to_json(row));
      out << array.dump(2) << std::endl;
      return;
    }
    case TableFormat::kCsv: {
      out << "argument,kind,exact,numeric,error_bound,pipeline,elapsed_ms" << std::endl;
      for (const auto& row : rows) {
        const Json j = to_json(row);
        out << row.argument << ',' << to_string(row.kind) << ','
            << csv_field(row.exact_value ? std::optional(exact::to_compact_string(*row.exact_value))
                                         : std::nullopt)
            << ',' << (j["numeric"].is_null() ? "" : j["numeric"].get<std::string>()) << ','
            << (j["error_bound"].is_null() ? "" : j["error_bound"].get<std::string>()) << ','
            << to_string(row.pipeline) << ',' << j["elapsed_ms"].dump() << std::endl;
      }
      return;
    }
    case TableFormat::kText: {
      for (const auto& row : rows) {
        std::ostringstream line;
        line << "zeta(" << row.argument << ")";
        line << "  " << std::left << std::setw(7) << to_string(row.kind) << "  " << std::setw(9)
             << to_string(row.pipeline);
        if (row.exact_value) line << "  = " << exact::to_string(*row.exact_value);
        if (row.numeric_value) {
          line << "  ≈ " << row.numeric_value->to_string()
               << "  (error <= " << row.numeric_value->error_bound() << ")";
        }
        line << "  [" << std::fixed << std::setprecision(3) << row.elapsed.count() << " ms]";
        print_line(out, line.str());
      }
      return;
    }
  }
}

std::vector<CheckOutcome> run_checks(long max_s, long precision_bits) {
  std::vector<CheckOutcome> outcomes;
  const long bound_exponent = -(precision_bits - 8);

  CheckOutcome exact_check = named_check("exact cotangent chain == bernoulli oracle (zeta(2k), 2k <= " +
                           std::to_string(max_s) + ")");
  for (long k = 1; 2 * k <= max_s && exact_check.passed; ++k) {
    const auto a = exact::zeta_even_exact(static_cast<unsigned>(k));
    const auto b = oracle::zeta_even_bernoulli(static_cast<unsigned>(k));
    if (a != b) {
      exact_check.passed = false;
      exact_check.first_failing_s = 2 * k;
      const BigRational diff = a.coefficient - b.coefficient;
      std::ostringstream os;
      os << "|" << diff << "| * pi^" << a.pi_exponent << " ~ "
         << std::abs(numeric::render_pi_power({diff, a.pi_exponent}, 64).to_double());
      exact_check.discrepancy = os.str();
    }
  }
  outcomes.push_back(std::move(exact_check));

  auto numeric_check = [&](CheckOutcome& check, long s, const BigFloat& value, const BigFloat& reference) {
    if (!check.passed) return;
    const bool ok = agree(value, reference) && value.error_bound().below_pow2(bound_exponent) &&
                    reference.error_bound().below_pow2(bound_exponent);
    if (!ok) {
      check.passed = false;
      check.first_failing_s = s;
      check.discrepancy = magnitude_string(discrepancy(value, reference)) + " vs allowed " +
                          magnitude_string(value.error_bound() + reference.error_bound());
    }
  };

  CheckOutcome even_check = named_check("polygamma route == exact closed form (even s <= " + std::to_string(max_s) +
                          ", " + std::to_string(precision_bits) + " bits)");
  CheckOutcome odd_check = named_check("polygamma route == dirichlet oracle (odd s <= " + std::to_string(max_s) +
                         ", " + std::to_string(precision_bits) + " bits)");
  for (long s = 2; s <= max_s; ++s) {
    const BigFloat value = numeric::zeta_via_polygamma(s, precision_bits);
    if (s % 2 == 0) {
      numeric_check(even_check, s, value,
                    numeric::render_pi_power(exact::zeta_even_exact(static_cast<unsigned>(s / 2)),
                                             precision_bits));
    } else {
      numeric_check(odd_check, s, value, oracle::zeta_dirichlet(s, precision_bits));
    }
  }
  outcomes.push_back(std::move(even_check));
  if (max_s >= 3) outcomes.push_back(std::move(odd_check));

  CheckOutcome reflection =
      named_check("reflection residual within bound (even s <= " + std::to_string(max_s) + ")");
  for (long s = 2; s <= max_s && reflection.passed; s += 2) {
    const BigFloat r = numeric::reflection_residual(s, precision_bits);
    if (mpfr_cmp(r.value(), r.error_bound().raw()) > 0) {
      reflection.passed = false;
      reflection.first_failing_s = s;
      reflection.discrepancy =
          magnitude_string(ErrorBound::magnitude_of(r.value())) + " vs bound " + magnitude_string(r.error_bound());
    }
  }
  outcomes.push_back(std::move(reflection));
  return outcomes;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann zeta values at integer arguments", "zeta"};
  app.require_subcommand(1);

  long s = 0;
  long max_s = 0;
  std::optional<long> prec;
  bool numeric_flag = false;
  bool verify = false;
  bool show_parts = false;
  TableFormat format = TableFormat::kText;
  const std::map<std::string, TableFormat> formats{
      {"text", TableFormat::kText}, {"json", TableFormat::kJson}, {"csv", TableFormat::kCsv}};

  auto* even = app.add_subcommand("even", "exact zeta(2s) from the cotangent derivative chain");
  even->add_option("s", s, "prints zeta(2s)")->required();
  even->add_option("--prec", prec, "working precision in bits for --numeric");
  even->add_flag("--numeric", numeric_flag, "also print the numeric value");
  even->add_flag("--verify", verify, "compare with the Bernoulli-number closed form");

  auto* any = app.add_subcommand("any", "numeric zeta(s) from polygamma values at 1/4 and 3/4");
  any->add_option("s", s, "integer argument >= 2")->required();
  any->add_option("--prec", prec, "precision in bits");
  any->add_flag("--show-parts", show_parts, "print the two polygamma summands");
  any->add_flag("--verify", verify, "compare with direct Dirichlet summation");

  auto* table = app.add_subcommand("table", "zeta(s) for s = 2..max_s");
  table->add_option("max_s", max_s, "largest argument")->required();
  table->add_option("--prec", prec, "precision in bits");
  table->add_option("--format", format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* check = app.add_subcommand("check", "run the cross-pipeline consistency checks");
  check->add_option("max_s", max_s, "largest argument")->required();
  check->add_option("--prec", prec, "precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!prec) {
      prec = default_precision();
      if (!prec) throw UsageError("ZETA_DEFAULT_PREC must be a positive integer");
    }
    if (*prec <= 0) throw UsageError("--prec must be a positive integer");

    if (even->parsed()) return cmd_even(s, *prec, numeric_flag, verify, out);
    if (any->parsed()) return cmd_any(s, *prec, show_parts, verify, out);
    if (table->parsed()) return cmd_table(max_s, *prec, format, out);
    if (check->parsed()) return cmd_check(max_s, *prec, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace zeta::cli
