#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "a2/lifting.hpp"

namespace a2::cli {

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& text);

/// Everything a command needs to build its Lifting. Scalars stay as text
/// until the braiding is known.
struct SessionConfig {
  int N = 3;
  long q_exp = 1;
  std::optional<long> q12_exp;  // defaults to q_exp
  unsigned order = 0;
  Case kind = Case::Atypical;
  std::string lambda = "0,0,0,0,0";
  RealizationConstraints realization;
  std::optional<Format> format;  // json unless set
  std::string output;

  Format output_format() const { return format.value_or(Format::Json); }

  /// Overlays the fields present in a JSON config object.
  void merge_json(const nlohmann::json& j);

  std::shared_ptr<const Braiding> braiding() const;
  /// Validates lambda against the braiding and the case; throws Error.
  std::shared_ptr<Lifting> lifting() const;
};

}  // namespace a2::cli
