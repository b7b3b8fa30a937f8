// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "commands.hpp"
#include "zeta/exact/cot_poly.hpp"
#include "zeta/exact/exact_zeta.hpp"
#include "zeta/numeric/polygamma.hpp"
#include "zeta/numeric/render.hpp"
#include "zeta/oracle/bernoulli.hpp"
#include "zeta/oracle/dirichlet.hpp"

namespace {

using namespace zeta;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int exit_status(const std::string& command) {
  const int raw = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Verdict golden_exact_values() {
  const auto start = Clock::now();
  exact::CotChain chain;
  const std::vector<std::pair<unsigned, BigRational>> expected{
      {1, BigRational(1, 6)}, {2, BigRational(1, 90)}, {3, BigRational(1, 945)}, {4, BigRational(1, 9450)}};
  bool ok = true;
  for (const auto& [s, q] : expected) ok = ok && exact::zeta_even_exact(s, chain) == exact::PiPower{q, 2 * s};
  const double ms = seconds_since(start) * 1e3;
  return {ok && ms < 10.0, std::to_string(ms) + " ms (limit 10 ms)"};
}

Verdict intermediate_polynomials() {
  exact::CotChain chain;
  // Leading factor times the bracketed coefficient sums.
  const std::vector<std::pair<unsigned, long>> expected{
      {1, -1L * (1 + 1)},
      {3, -2L * (3 + 1) * (1 + 1)},
      {5, -8L * (1 + 1) * (15 + 15 + 2)},
      {7, -16L * (1 + 1) * (315 + 525 + 231 + 17)}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [n, value] : expected) {
    const BigInt got = exact::eval_at_one(chain.at(n));
    detail << "Q" << n << "(1)=" << got << " ";
    ok = ok && got == value;
  }
  ok = ok && expected[0].second == -2 && expected[1].second == -16 && expected[2].second == -512 &&
       expected[3].second == -34816;
  return {ok, detail.str()};
}

Verdict oracle_equivalence() {
  const auto start = Clock::now();
  exact::CotChain chain;
  for (unsigned s = 1; s <= 50; ++s) {
    if (exact::zeta_even_exact(s, chain) != oracle::zeta_even_bernoulli(s)) {
      return {false, "mismatch at s=" + std::to_string(s)};
    }
  }
  const double secs = seconds_since(start);
  return {secs < 30.0, "s=1..50 exact equality, " + std::to_string(secs) + " s (limit 30 s)"};
}

Verdict polygamma_validation() {
  const auto start = Clock::now();
  constexpr long kPrec = 128;
  for (long s = 2; s <= 20; ++s) {
    const BigFloat value = numeric::zeta_via_polygamma(s, kPrec);
    const BigFloat reference =
        s % 2 == 0 ? numeric::render_pi_power(exact::zeta_even_exact(static_cast<unsigned>(s / 2)), kPrec)
                   : oracle::zeta_dirichlet(s, kPrec);
    const ErrorBound combined = value.error_bound() + reference.error_bound();
    if (!agree(value, reference) || !combined.below_pow2(-100)) {
      std::ostringstream os;
      os << "s=" << s << " discrepancy " << discrepancy(value, reference) << " bound " << combined;
      return {false, os.str()};
    }
  }
  const double secs = seconds_since(start);
  return {secs < 60.0, "s=2..20 within bounds < 2^-100, " + std::to_string(secs) + " s (limit 60 s)"};
}

Verdict reflection_check() {
  std::ostringstream detail;
  for (long s : {2L, 4L, 6L, 8L, 10L}) {
    const BigFloat r = numeric::reflection_residual(s, 128);
    detail << "s=" << s << ":" << ErrorBound::magnitude_of(r.value()) << " ";
    if (mpfr_cmp_ui_2exp(r.value(), 1, -100) >= 0) return {false, detail.str()};
  }
  return {true, detail.str() + "(all < 2^-100)"};
}

Verdict precision_honesty() {
  const unsigned seed = 0x5eed2026u;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> pick_s(2, 30);
  std::uniform_int_distribution<long> pick_prec(48, 320);
  for (int i = 0; i < 20; ++i) {
    const long s = pick_s(rng);
    const long p = pick_prec(rng);
    const BigFloat low = numeric::zeta_via_polygamma(s, p);
    const BigFloat high = numeric::zeta_via_polygamma(s, 2 * p);
    if (discrepancy(low, high) > low.error_bound()) {
      return {false, "s=" + std::to_string(s) + " p=" + std::to_string(p)};
    }
  }
  return {true, "20 random (s, precision) pairs, seed " + std::to_string(seed)};
}

Verdict cli_contract() {
  const int check = exit_status(std::string(ZETA_BIN) + " check 20 --prec 128");
  const int faulty = exit_status(std::string(ZETA_FAULTY_BIN) + " check 20 --prec 128");

  bool round_trip = true;
  for (const auto& row : cli::build_table(20, 128)) {
    round_trip = round_trip && cli::result_from_json(cli::Json::parse(cli::to_json(row).dump())) == row;
  }
  std::ostringstream detail;
  detail << "check exit=" << check << ", json round-trip=" << (round_trip ? "ok" : "FAILED")
         << ", fault-injected exit=" << faulty;
  return {check == 0 && round_trip && faulty == cli::kExitVerifyFailed, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 golden exact values zeta(2..8)", golden_exact_values},
      {"AC2 intermediate cotangent polynomials", intermediate_polynomials},
      {"AC3 cotangent chain == Bernoulli oracle, s=1..50", oracle_equivalence},
      {"AC4 polygamma formula vs exact/Dirichlet, s=2..20", polygamma_validation},
      {"AC5 reflection residuals", reflection_check},
      {"AC6 precision honesty", precision_honesty},
      {"AC7 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    Verdict v{false, "threw"};
    try {
      v = criterion();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.passed ? "PASS " : "FAIL ") << name << " -- " << v.detail << std::endl;
    if (!v.passed) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
