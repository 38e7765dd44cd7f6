// Copyright 2026 The QSE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qse/entropy.hpp"

namespace qse {

/// Default tolerance for assertion-mode checks.
inline constexpr double kAssertionTolerance = 1e-9;

/// One two-sided inequality lhs <= mid <= rhs.
struct Margin {
  std::string name;
  double lhs = 0.0;
  double mid = 0.0;
  double rhs = 0.0;

  /// min(mid - lhs, rhs - mid); negative means violated.
  double slack() const { return std::min(mid - lhs, rhs - mid); }
  bool tight(double tol = kAssertionTolerance) const { return std::abs(slack()) <= tol; }
};

enum class CheckMode { assertion, exploratory };

inline std::string to_string(CheckMode m) { return m == CheckMode::assertion ? "assertion" : "exploratory"; }

/// Result of a single theorem check. `pass` is only ever false in assertion
/// mode; exploratory checks record violations in `max_violation` and pass.
struct Report {
  std::string theorem;
  EntropyParams params;
  int trials = 0;
  double max_violation = 0.0;
  bool applicable = true;
  bool pass = true;
  CheckMode mode = CheckMode::assertion;
  std::vector<Margin> margins;
  std::string note;
};

inline void to_json(nlohmann::json& j, const Margin& m) {
  j = nlohmann::json{{"name", m.name}, {"lhs", m.lhs}, {"mid", m.mid}, {"rhs", m.rhs}, {"slack", m.slack()},
                     {"tight", m.tight()}};
}

inline void to_json(nlohmann::json& j, const EntropyParams& p) {
  j = nlohmann::json{{"q", p.q}, {"s", p.s}, {"mode", to_string(p.mode)}};
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"theorem", r.theorem},
                     {"params", r.params},
                     {"trials", r.trials},
                     {"max_violation", r.max_violation},
                     {"applicable", r.applicable},
                     {"pass", r.pass},
                     {"mode", to_string(r.mode)}};
  if (!r.margins.empty()) j["margins"] = r.margins;
  if (!r.note.empty()) j["note"] = r.note;
}

}  // namespace qse
