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
#include <optional>
#include <string>

#include "knotgirth/cli/report.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/link.hpp"
#include "knotgirth/surgery.hpp"

namespace knotgirth::cli {

/// Either an inline braid (text, strand count, closure) or a diagram JSON
/// file. Exactly one must be given.
struct DiagramSource {
  std::optional<std::string> braid;
  int strands = 0;
  Closure closure = Closure::Trace;
  std::optional<std::string> diagram_file;
};

MorseLink load_diagram(const DiagramSource& source);
BraidWord load_braid(const DiagramSource& source);
Json source_json(const DiagramSource& source);

RunReport cmd_stats(const DiagramSource& source);
RunReport cmd_jones(const DiagramSource& source, int r);
RunReport cmd_vogel(const DiagramSource& source, int r);
RunReport cmd_twist(const DiagramSource& source, const TwistWindow& window, int k, int r);

struct SimulateOptions {
  int r = 5;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  int reps = 1;
  std::optional<std::int64_t> samples_per_part;
};

RunReport cmd_simulate_plat(const DiagramSource& source, const SimulateOptions& options);
RunReport cmd_simulate_dqc1(const DiagramSource& source, const SimulateOptions& options);
RunReport cmd_pipeline(const DiagramSource& source, const SimulateOptions& options);

}  // namespace knotgirth::cli
