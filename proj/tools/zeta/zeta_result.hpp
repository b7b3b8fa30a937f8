#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "zeta/exact/pi_power.hpp"
#include "zeta/numeric/big_float.hpp"

namespace zeta::cli {

enum class ResultKind { kExact, kNumeric };
enum class Pipeline { kCotangent, kPolygamma, kBernoulliOracle, kDirichletOracle };

std::string_view to_string(ResultKind kind);
std::string_view to_string(Pipeline pipeline);
ResultKind parse_kind(std::string_view text);
Pipeline parse_pipeline(std::string_view text);

using Milliseconds = std::chrono::duration<double, std::milli>;

// One zeta value plus where it came from. An exact result may also carry its
// numeric rendering; a numeric result never carries an exact value.
struct ZetaResult {
  long argument = 0;
  ResultKind kind = ResultKind::kNumeric;
  std::optional<exact::PiPower> exact_value;
  std::optional<BigFloat> numeric_value;
  Pipeline pipeline = Pipeline::kPolygamma;
  Milliseconds elapsed{0};

  // exact => exact_value and an exact-capable pipeline; numeric => numeric_value.
  bool is_consistent() const;

  friend bool operator==(const ZetaResult&, const ZetaResult&) = default;
};

// Keys keep insertion order so every rendering lists fields identically.
using Json = nlohmann::ordered_json;

// Fields: argument, kind, exact, numeric, error_bound, precision_bits,
// pipeline, elapsed_ms. numeric and error_bound are decimal strings that
// reproduce the value bit for bit at precision_bits.
Json to_json(const ZetaResult& result);
ZetaResult result_from_json(const Json& j);

}  // namespace zeta::cli
