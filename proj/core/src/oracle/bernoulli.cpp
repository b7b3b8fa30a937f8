#include "zeta/oracle/bernoulli.hpp"

#include <atomic>

#include "zeta/errors.hpp"

namespace zeta::oracle {
namespace {

std::atomic<unsigned> g_sign_fault{0};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

BernoulliTable& shared_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

BernoulliTable::BernoulliTable() {
  values_.emplace_back(1);
  values_.emplace_back(-1, 2);
}

const BigRational& BernoulliTable::at(unsigned n) {
  extend_to(n);
  return values_[n];
}

void BernoulliTable::extend_to(unsigned n) {
  for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
    if (m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j; odd j >= 3 vanish.
    mpq_class acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;
      acc += mpq_class(binomial(m + 1, j)) * values_[j].raw();
    }
    acc /= -static_cast<long>(m + 1);
    acc.canonicalize();
    values_.emplace_back(BigInt(acc.get_num()), BigInt(acc.get_den()));
  }
}

BigRational bernoulli(unsigned n) {
  BigRational value;
  {
    std::lock_guard lock(table_mutex());
    value = shared_table().at(n);
  }
  const unsigned fault = g_sign_fault.load(std::memory_order_relaxed);
  if (fault != 0 && fault == n) value = -value;
  return value;
}

exact::PiPower zeta_even_bernoulli(unsigned s) {
  if (s == 0) throw DomainError("zeta_even_bernoulli: s must be >= 1");
  const unsigned two_s = 2 * s;
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, two_s);
  BigRational coefficient = bernoulli(two_s) * BigRational(pow2, 2 * factorial(two_s));
  if (s % 2 == 0) coefficient = -coefficient;
  return exact::PiPower{coefficient, two_s};
}

namespace testing {

void set_bernoulli_sign_fault(unsigned index) { g_sign_fault.store(index); }
void clear_bernoulli_sign_fault() { g_sign_fault.store(0); }

}  // namespace testing
}  // namespace zeta::oracle
