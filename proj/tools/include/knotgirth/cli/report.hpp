// Copyright 2026 The knotgirth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "knotgirth/cyclotomic.hpp"
#include "knotgirth/link.hpp"
#include "knotgirth/seifert.hpp"

namespace knotgirth::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Text };
OutputFormat parse_format(std::string_view name);

/// The single output document shared by every subcommand.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::uint64_t seed = 0;
  double wall_time_seconds = 0;
};

Json to_json(const RunReport& report);
RunReport report_from_json(const Json& doc);
/// JSON (pretty-printed) or an indented key: value listing.
std::string render(const RunReport& report, OutputFormat format);

/// {"order": N, "coefficients": ["-1", "0", ...], "re": x, "im": y}.
/// Coefficients are decimal strings so arbitrarily large integers survive.
Json cyclotomic_json(const Cyclotomic& value);
Json stats_json(const DiagramStats& stats);
Json seifert_json(const SeifertData& data);

}  // namespace knotgirth::cli
