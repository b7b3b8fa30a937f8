#pragma once

#include <stdexcept>
#include <string>

namespace zeta {

// Argument outside an operation's domain (s = 0 for the exact route, a
// non-positive precision, a Hurwitz parameter outside (0, 1], ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// s = 1, the pole of zeta. Kept distinct so callers can report it separately.
class PoleError : public DomainError {
 public:
  PoleError() : DomainError("zeta(s) has a pole at s = 1") {}
};

}  // namespace zeta
