#include "zeta/exact/pi_power.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "zeta/errors.hpp"

namespace zeta::exact {

std::string to_string(const PiPower& value) {
  return "(" + value.coefficient.to_string() + ") * pi^" + std::to_string(value.pi_exponent);
}

std::string to_compact_string(const PiPower& value) {
  return "(" + value.coefficient.to_string() + ")*pi^" + std::to_string(value.pi_exponent);
}

PiPower parse_pi_power(std::string_view text) {
  std::string squeezed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) squeezed.push_back(ch);
  }
  const auto close = squeezed.find(")*pi^");
  if (squeezed.empty() || squeezed.front() != '(' || close == std::string::npos) {
    throw DomainError("malformed pi power: '" + std::string(text) + "'");
  }
  PiPower out;
  out.coefficient = BigRational::parse(std::string_view(squeezed).substr(1, close - 1));
  const char* first = squeezed.data() + close + 5;
  const char* last = squeezed.data() + squeezed.size();
  const auto [ptr, ec] = std::from_chars(first, last, out.pi_exponent);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw DomainError("malformed pi exponent: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace zeta::exact
