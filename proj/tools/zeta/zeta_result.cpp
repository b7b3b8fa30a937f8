#include "zeta_result.hpp"

#include <stdexcept>
#include <string>

#include "zeta/errors.hpp"

namespace zeta::cli {

std::string_view to_string(ResultKind kind) {
  return kind == ResultKind::kExact ? "exact" : "numeric";
}

std::string_view to_string(Pipeline pipeline) {
  switch (pipeline) {
    case Pipeline::kCotangent: return "cotangent";
    case Pipeline::kPolygamma: return "polygamma";
    case Pipeline::kBernoulliOracle: return "bernoulli_oracle";
    case Pipeline::kDirichletOracle: return "dirichlet_oracle";
  }
  return "unknown";
}

ResultKind parse_kind(std::string_view text) {
  if (text == "exact") return ResultKind::kExact;
  if (text == "numeric") return ResultKind::kNumeric;
  throw DomainError("unknown result kind '" + std::string(text) + "'");
}

Pipeline parse_pipeline(std::string_view text) {
  for (Pipeline p : {Pipeline::kCotangent, Pipeline::kPolygamma, Pipeline::kBernoulliOracle,
                     Pipeline::kDirichletOracle}) {
    if (to_string(p) == text) return p;
  }
  throw DomainError("unknown pipeline '" + std::string(text) + "'");
}

bool ZetaResult::is_consistent() const {
  if (kind == ResultKind::kExact) {
    return exact_value.has_value() &&
           (pipeline == Pipeline::kCotangent || pipeline == Pipeline::kBernoulliOracle);
  }
  return numeric_value.has_value() && !exact_value.has_value();
}

Json to_json(const ZetaResult& result) {
  Json j;
  j["argument"] = result.argument;
  j["kind"] = to_string(result.kind);
  j["exact"] = result.exact_value ? Json(exact::to_compact_string(*result.exact_value))
                                  : Json(nullptr);
  if (result.numeric_value) {
    j["numeric"] = result.numeric_value->to_string();
    j["error_bound"] = result.numeric_value->error_bound().to_string();
    j["precision_bits"] = static_cast<long>(result.numeric_value->precision_bits());
  } else {
    j["numeric"] = nullptr;
    j["error_bound"] = nullptr;
    j["precision_bits"] = nullptr;
  }
  j["pipeline"] = to_string(result.pipeline);
  j["elapsed_ms"] = result.elapsed.count();
  return j;
}

ZetaResult result_from_json(const Json& j) {
  ZetaResult r;
  try {
    r.argument = j.at("argument").get<long>();
    r.kind = parse_kind(j.at("kind").get<std::string>());
    if (!j.at("exact").is_null()) r.exact_value = exact::parse_pi_power(j.at("exact").get<std::string>());
    if (!j.at("numeric").is_null()) {
      r.numeric_value = BigFloat::parse(j.at("numeric").get<std::string>(),
                                        j.at("precision_bits").get<long>(),
                                        ErrorBound::parse(j.at("error_bound").get<std::string>()));
    }
    r.pipeline = parse_pipeline(j.at("pipeline").get<std::string>());
    r.elapsed = Milliseconds(j.at("elapsed_ms").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed result json: ") + e.what());
  }
  if (!r.is_consistent()) throw DomainError("result json violates kind/pipeline invariants");
  return r;
}

}  // namespace zeta::cli
