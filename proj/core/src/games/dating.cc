// Copyright 2026 The Satgame Authors
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

#include "satgame/games/dating.h"

#include <algorithm>
#include <string>
#include <utility>

#include "satgame/errors.h"

namespace satgame {
namespace {

bool Has(const std::vector<int>& set, int x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

// f for the player `self` of one group. `mine` holds that group's choices,
// `theirs` the other group's; acceptable is self's acceptability set.
std::vector<int> SideSet(int self, const std::vector<int>& acceptable,
                         std::span<const int> mine, std::span<const int> theirs) {
  std::vector<int> out;
  const int n = static_cast<int>(theirs.size());
  for (int k = 0; k < n; ++k) {
    if (!Has(acceptable, k) || theirs[k] != self) continue;
    bool taken = false;
    for (int j = 0; j < n && !taken; ++j) taken = j != self && mine[j] == k;
    if (!taken) out.push_back(k);
  }
  return out;
}

class DatingCorrespondence final : public Correspondence {
 public:
  explicit DatingCorrespondence(DatingInstance instance) : instance_(std::move(instance)) {}

  void SatisfyingActions(PlayerId player, const JointAction& profile, const EnvSample&,
                         std::span<std::uint8_t> row) const override {
    const int n = instance_.n;
    std::span<const int> alphas = profile.actions().subspan(0, n);
    std::span<const int> betas = profile.actions().subspan(n, n);
    std::fill(row.begin(), row.end(), 0);
    const std::vector<int> set =
        player < n ? SideSet(player, instance_.alpha_acceptable[player], alphas, betas)
                   : SideSet(player - n, instance_.beta_acceptable[player - n], betas, alphas);
    for (int k : set) row[k] = 1;
  }

 private:
  DatingInstance instance_;
};

}  // namespace

void DatingInstance::Validate() const {
  if (n < 1) throw ArgumentError("dating game needs N >= 1 per group");
  if (static_cast<int>(alpha_acceptable.size()) != n ||
      static_cast<int>(beta_acceptable.size()) != n) {
    throw ArgumentError("need one acceptability set per player");
  }
  for (const auto* group : {&alpha_acceptable, &beta_acceptable}) {
    for (const auto& set : *group) {
      for (int k : set) {
        if (k < 0 || k >= n) throw ArgumentError("acceptable partner index out of range");
      }
    }
  }
}

DatingInstance DatingInstance::Transposed() const {
  return DatingInstance{n, beta_acceptable, alpha_acceptable};
}

DatingSets DatingSatisfyingSets(const DatingInstance& instance, const JointAction& profile) {
  instance.Validate();
  const int n = instance.n;
  if (profile.size() != 2 * n) throw ArgumentError("dating profile needs 2N entries");
  for (ActionId x : profile) {
    if (x < 0 || x >= n) throw ArgumentError("dating action out of range");
  }
  std::span<const int> alphas = profile.actions().subspan(0, n);
  std::span<const int> betas = profile.actions().subspan(n, n);
  DatingSets out;
  for (int i = 0; i < n; ++i) {
    out.alpha.push_back(SideSet(i, instance.alpha_acceptable[i], alphas, betas));
  }
  for (int j = 0; j < n; ++j) {
    out.beta.push_back(SideSet(j, instance.beta_acceptable[j], betas, alphas));
  }
  return out;
}

GameDefinition MakeDatingGame(DatingInstance instance) {
  instance.Validate();
  std::vector<int> counts(2 * instance.n, instance.n);
  return GameDefinition("dating", std::move(counts),
                        std::make_shared<DatingCorrespondence>(std::move(instance)));
}

}  // namespace satgame
