// Copyright 2026 The vtr-lab Authors.
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

#ifndef VTRLAB_COUNTS_H_
#define VTRLAB_COUNTS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vtrlab {

// N(s, a) and N(s, a, s') over all transitions observed so far.
class VisitCounts {
 public:
  VisitCounts(int num_states, int num_actions)
      : num_states_(num_states),
        num_actions_(num_actions),
        pair_(static_cast<std::size_t>(num_states) * num_actions, 0),
        triple_(static_cast<std::size_t>(num_states) * num_actions * num_states, 0) {}

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  void Add(int s, int a, int next) {
    ++pair_[static_cast<std::size_t>(s) * num_actions_ + a];
    ++triple_[(static_cast<std::size_t>(s) * num_actions_ + a) * num_states_ + next];
  }

  std::int64_t pair(int s, int a) const {
    return pair_[static_cast<std::size_t>(s) * num_actions_ + a];
  }
  std::int64_t triple(int s, int a, int next) const {
    return triple_[(static_cast<std::size_t>(s) * num_actions_ + a) * num_states_ + next];
  }
  std::int64_t total() const {
    std::int64_t n = 0;
    for (auto c : pair_) n += c;
    return n;
  }

 private:
  int num_states_;
  int num_actions_;
  std::vector<std::int64_t> pair_;
  std::vector<std::int64_t> triple_;
};

}  // namespace vtrlab

#endif  // VTRLAB_COUNTS_H_
