#include <json.hpp>

#include "kaonbell/errors.hpp"
#include "kaonbell/lr.hpp"

namespace kaonbell {

std::string model_to_json(const ModelRecord& record) {
  nlohmann::ordered_json j;
  j["p111_norm"] = record.model.p111_norm;
  j["p112_norm"] = record.model.p112_norm;
  j["p333_norm"] = record.model.p333_norm;
  j["p334_norm"] = record.model.p334_norm;
  j["tau1"] = record.tau1;
  j["tau2"] = record.tau2;
  return j.dump(2);
}

ModelRecord model_from_json(const DecayParams& params, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("model JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("model JSON: expected an object");

  const auto number = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number()) {
      throw DomainError(std::string("model JSON: missing numeric field '") + key + "'");
    }
    return it->get<double>();
  };

  ModelRecord r;
  r.model.p111_norm = number("p111_norm");
  r.model.p112_norm = number("p112_norm");
  r.model.p333_norm = number("p333_norm");
  r.model.p334_norm = number("p334_norm");
  r.tau1 = number("tau1");
  r.tau2 = number("tau2");
  require_feasible(feasibility_box(params, r.tau1, r.tau2), r.model);
  return r;
}

}  // namespace kaonbell
