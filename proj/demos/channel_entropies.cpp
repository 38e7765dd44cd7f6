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

// Map entropy of a few standard qubit channels across the (q,s) family.

#include <cstdio>
#include <utility>
#include <vector>

#include "qse/qse.hpp"

int main() {
  using namespace qse;
  const std::vector<std::pair<const char*, KrausSet>> channels{
      {"identity", identity_channel(2)},
      {"pinching", computational_pinching(2)},
      {"amplitude_damping(0.3)", amplitude_damping_channel(2, 0.3)},
      {"depolarizing(0.5)", depolarizing_channel(2, 0.5)},
      {"depolarizing(1)", depolarizing_channel(2, 1.0)},
  };
  const std::vector<EntropyParams> params{EntropyParams::von_neumann(), EntropyParams::renyi(2.0),
                                          EntropyParams::tsallis(2.0), EntropyParams(2.0, 0.5)};

  std::printf("%-24s %10s %10s %10s %10s\n", "channel", "vN", "renyi2", "tsallis2", "q=2,s=.5");
  for (const auto& [name, k] : channels) {
    ChoiMatrix c = kraus_to_choi(k);
    std::printf("%-24s", name);
    for (const auto& p : params) std::printf(" %10.6f", map_entropy(c, p) + 0.0);
    std::printf("\n");
  }
}
