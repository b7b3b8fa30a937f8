#include "zeta/exact/cot_poly.hpp"

#include <utility>

#include "zeta/errors.hpp"

namespace zeta::exact {

CotPoly CotPoly::identity() { return CotPoly(0, {BigInt(0), BigInt(1)}); }

CotPoly::CotPoly(unsigned order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& CotPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("CotPoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool CotPoly::satisfies_invariants() const {
  if (degree() != static_cast<long>(order_) + 1) return false;
  BigInt expected = factorial(order_);
  if (order_ % 2 == 1) expected = -expected;
  if (coeffs_.back() != expected) return false;
  const std::size_t parity = (order_ + 1) % 2;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k % 2 != parity && coeffs_[k] != 0) return false;
  }
  return true;
}

CotPoly diff_cot_poly(const CotPoly& p) {
  const auto a = p.coeffs();
  if (a.empty()) return CotPoly(p.order() + 1, {});

  // d_k = (k+1) a_{k+1}; result r_k = -(d_k + d_{k-2}).
  std::vector<BigInt> d(a.size() - 1);
  for (std::size_t k = 0; k + 1 < a.size(); ++k) d[k] = a[k + 1] * static_cast<unsigned long>(k + 1);

  std::vector<BigInt> r(d.size() + 2);
  for (std::size_t k = 0; k < r.size(); ++k) {
    BigInt acc = 0;
    if (k < d.size()) acc += d[k];
    if (k >= 2 && k - 2 < d.size()) acc += d[k - 2];
    r[k] = -acc;
  }
  return CotPoly(p.order() + 1, std::move(r));
}

BigInt eval_at_one(const CotPoly& p) {
  BigInt sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

CotChain::CotChain() { chain_.push_back(CotPoly::identity()); }

const CotPoly& CotChain::at(unsigned order) {
  while (chain_.size() <= order) chain_.push_back(diff_cot_poly(chain_.back()));
  return chain_[order];
}

CotPoly SharedCotChain::at(unsigned order) {
  std::lock_guard lock(mutex_);
  return chain_.at(order);
}

BigInt SharedCotChain::value_at_one(unsigned order) {
  std::lock_guard lock(mutex_);
  return eval_at_one(chain_.at(order));
}

SharedCotChain& SharedCotChain::instance() {
  static SharedCotChain shared;
  return shared;
}

}  // namespace zeta::exact
