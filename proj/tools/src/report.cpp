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

#include "knotgirth/cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace knotgirth::cli {

namespace {

void render_text(std::ostringstream& os, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = value.begin(); it != value.end(); ++it) {
    os << pad << it.key() << ':';
    if (it->is_object() && !it->empty()) {
      os << '\n';
      render_text(os, *it, indent + 2);
    } else {
      os << ' ' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("format must be json or text");
}

Json to_json(const RunReport& report) {
  Json doc;
  doc["command"] = report.command;
  doc["inputs"] = report.inputs;
  doc["outputs"] = report.outputs;
  doc["seed"] = report.seed;
  doc["wall_time_seconds"] = report.wall_time_seconds;
  return doc;
}

RunReport report_from_json(const Json& doc) {
  RunReport r;
  r.command = doc.at("command").get<std::string>();
  r.inputs = doc.at("inputs");
  r.outputs = doc.at("outputs");
  r.seed = doc.at("seed").get<std::uint64_t>();
  r.wall_time_seconds = doc.at("wall_time_seconds").get<double>();
  return r;
}

std::string render(const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(report).dump(2) + "\n";
  std::ostringstream os;
  render_text(os, to_json(report), 0);
  return os.str();
}

Json cyclotomic_json(const Cyclotomic& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back(c.str());
  const auto z = value.to_complex();
  Json j;
  j["order"] = value.ring().order();
  j["coefficients"] = std::move(coeffs);
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json stats_json(const DiagramStats& stats) {
  Json j;
  j["girth"] = stats.girth;
  j["crossings"] = stats.crossings;
  j["components"] = stats.components;
  return j;
}

Json seifert_json(const SeifertData& data) {
  Json j;
  j["circles"] = data.circles;
  j["euler_characteristic"] = data.euler_characteristic;
  j["genus"] = data.genus_if_knot ? Json(*data.genus_if_knot) : Json();
  return j;
}

}  // namespace knotgirth::cli
