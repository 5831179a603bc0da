#include "a2cli/session.hpp"

#include "a2/serialize.hpp"

namespace a2::cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "md") return Format::Markdown;
  throw Error("unknown format '" + text + "' (expected json, csv or md)");
}

namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw Error("config: scalars must be strings or integers");
}

}  // namespace

void SessionConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("config: expected a JSON object");
  try {
    if (j.contains("N")) N = j.at("N").get<int>();
    if (j.contains("q_exp")) q_exp = j.at("q_exp").get<long>();
    if (j.contains("q12_exp")) q12_exp = j.at("q12_exp").get<long>();
    if (j.contains("order")) order = j.at("order").get<unsigned>();
    if (j.contains("case")) kind = parse_case(j.at("case").get<std::string>());
    if (j.contains("format")) format = parse_format(j.at("format").get<std::string>());
    if (j.contains("output")) output = j.at("output").get<std::string>();
    if (j.contains("lambda")) {
      const auto& l = j.at("lambda");
      std::string text;
      if (l.is_string()) {
        text = l.get<std::string>();
      } else if (l.is_array()) {
        for (const auto& v : l) text += (text.empty() ? "" : ",") + scalar_text(v);
      } else if (l.is_object()) {
        for (const char* key : {"l1", "l2", "l12", "l112", "l122"})
          text += (text.empty() ? "" : ",") + (l.contains(key) ? scalar_text(l.at(key)) : std::string("0"));
      } else {
        throw Error("config: lambda must be a string, array or object");
      }
      lambda = text;
    }
    if (j.contains("realization")) {
      const auto& r = j.at("realization");
      auto flag = [&](const char* key, bool& field) {
        if (r.contains(key)) field = r.at(key).get<bool>();
      };
      flag("chi1_N_trivial", realization.chi1_N_trivial);
      flag("chi2_N_trivial", realization.chi2_N_trivial);
      flag("chi1chi2_N_trivial", realization.chi1chi2_N_trivial);
      flag("chi1sq_chi2_trivial", realization.chi1sq_chi2_trivial);
      flag("chi1_chi2sq_trivial", realization.chi1_chi2sq_trivial);
      if (r.contains("weight_modulus")) realization.weight_modulus = r.at("weight_modulus").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
}

std::shared_ptr<const Braiding> SessionConfig::braiding() const {
  return std::make_shared<const Braiding>(N, q_exp, q12_exp.value_or(q_exp), order);
}

std::shared_ptr<Lifting> SessionConfig::lifting() const {
  auto br = braiding();
  auto v = parse_scalar_list(*br, lambda, 5);
  return std::make_shared<Lifting>(br, kind, DeformationParams{v[0], v[1], v[2], v[3], v[4]}, realization);
}

}  // namespace a2::cli
