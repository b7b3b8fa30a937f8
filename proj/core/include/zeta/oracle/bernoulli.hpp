#pragma once

#include <mutex>
#include <vector>

#include "zeta/big_rational.hpp"
#include "zeta/exact/pi_power.hpp"

namespace zeta::oracle {

// B_0, B_1, ... with B_1 = -1/2, grown on demand from
//   sum_{j=0}^{m} C(m+1, j) B_j = 0,  m >= 1.
// Not synchronized; bernoulli() below wraps a shared instance.
class BernoulliTable {
 public:
  BernoulliTable();

  const BigRational& at(unsigned n);
  std::size_t size() const { return values_.size(); }

 private:
  void extend_to(unsigned n);

  std::vector<BigRational> values_;
};

// B_n from a process-wide, mutex-guarded table.
BigRational bernoulli(unsigned n);

// Euler: zeta(2s) = (-1)^(s+1) B_2s (2 pi)^(2s) / (2 (2s)!). Throws for s = 0.
exact::PiPower zeta_even_bernoulli(unsigned s);

namespace testing {

// Makes bernoulli(index) return -B_index until cleared. For fault-injection
// tests of the consistency checks; 0 disables.
void set_bernoulli_sign_fault(unsigned index);
void clear_bernoulli_sign_fault();

}  // namespace testing
}  // namespace zeta::oracle
