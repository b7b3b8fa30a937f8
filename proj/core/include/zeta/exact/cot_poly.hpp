#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <vector>

#include "zeta/big_rational.hpp"

namespace zeta::exact {

// Integer polynomial Q_n(c) in c = cot(pi z) with
//   d^n/dz^n cot(pi z) = pi^n * Q_n(cot(pi z)).
// Coefficients are dense, index = power of c, trailing zeros trimmed.
class CotPoly {
 public:
  // Q_0(c) = c.
  static CotPoly identity();

  CotPoly(unsigned order, std::vector<BigInt> coeffs);

  unsigned order() const { return order_; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const;

  // degree n+1, leading coefficient (-1)^n n!, only powers of parity (n+1) mod 2.
  bool satisfies_invariants() const;

  friend bool operator==(const CotPoly&, const CotPoly&) = default;

 private:
  unsigned order_;
  std::vector<BigInt> coeffs_;
};

// Q_{n+1}(c) = -Q_n'(c) * (1 + c^2).
CotPoly diff_cot_poly(const CotPoly& p);

// Q_n(1), i.e. the value at z = 1/4 where cot(pi/4) = 1.
BigInt eval_at_one(const CotPoly& p);

// Lazily extended Q_0, Q_1, ... so a sweep over orders differentiates once.
// Not synchronized; see SharedCotChain for a process-wide cache.
class CotChain {
 public:
  CotChain();

  const CotPoly& at(unsigned order);
  std::size_t size() const { return chain_.size(); }

 private:
  std::vector<CotPoly> chain_;
};

// Mutex-guarded CotChain. Returns copies so readers never alias storage that
// another thread may be growing.
class SharedCotChain {
 public:
  CotPoly at(unsigned order);
  BigInt value_at_one(unsigned order);

  static SharedCotChain& instance();

 private:
  std::mutex mutex_;
  CotChain chain_;
};

}  // namespace zeta::exact
