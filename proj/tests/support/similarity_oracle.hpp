// Copyright 2026 The Volver Authors.
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


// Exhaustive reference for the similarity tests: the largest total length of
// a set of pairwise non-crossing common substrings of a and b.

#ifndef VOLVER_TESTS_SIMILARITY_ORACLE_HPP_
#define VOLVER_TESTS_SIMILARITY_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <tuple>

namespace volver::testing {

class DecompositionOracle {
 public:
  DecompositionOracle(std::string a, std::string b) : a_(std::move(a)), b_(std::move(b)) {}

  std::size_t matched() { return best(0, a_.size(), 0, b_.size()); }

 private:
  std::size_t best(std::size_t alo, std::size_t ahi, std::size_t blo, std::size_t bhi) {
    if (alo >= ahi || blo >= bhi) return 0;
    auto key = std::make_tuple(alo, ahi, blo, bhi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t result = 0;
    for (std::size_t i = alo; i < ahi; ++i) {
      for (std::size_t j = blo; j < bhi; ++j) {
        for (std::size_t len = 1; i + len <= ahi && j + len <= bhi &&
                                  a_[i + len - 1] == b_[j + len - 1];
             ++len) {
          result = std::max(result, len + best(alo, i, blo, j) +
                                        best(i + len, ahi, j + len, bhi));
        }
      }
    }
    memo_[key] = result;
    return result;
  }

  std::string a_, b_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> memo_;
};

inline std::string random_word(std::mt19937& rng, std::size_t max_len,
                               const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

}  // namespace volver::testing

#endif  // VOLVER_TESTS_SIMILARITY_ORACLE_HPP_
