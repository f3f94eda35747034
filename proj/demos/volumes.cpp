// Copyright 2026 The qfivol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Covariance and Fisher volumes for one random state and three observables,
// across the regular catalog.

#include <cstdio>

#include "qfivol/random.hpp"
#include "qfivol/volumes.hpp"

int main() {
  using namespace qfivol;
  CounterRng rng(7, 0);
  const auto state = random_faithful_state(4, rng);
  const auto obs = random_observables(4, 3, rng);

  std::printf("%-10s %14s %14s %14s\n", "f", "cov_vol", "qfi_vol", "F");
  for (const auto& f : regular_catalog()) {
    const auto r = build_gram_report(f, state, obs);
    std::printf("%-10s %14.8g %14.8g %14.8g\n", to_token(f).c_str(), r.cov_vol, r.qfi_vol, r.F);
  }
  return 0;
}
