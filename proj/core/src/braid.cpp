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

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "knotgirth/link.hpp"

namespace knotgirth {

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 1) {
    throw std::invalid_argument("braid needs at least one strand");
  }
  for (const auto& letter : letters_) {
    if (letter.generator < 1 || letter.generator >= strand_count_) {
      throw std::invalid_argument("generator " +
                                  std::to_string(letter.generator) +
                                  " out of range for " +
                                  std::to_string(strand_count_) + " strands");
    }
    if (letter.sign != 1 && letter.sign != -1) {
      throw std::invalid_argument("braid letter sign must be +1 or -1");
    }
  }
}

BraidWord BraidWord::identity(int strand_count) { return {strand_count, {}}; }

std::vector<int> BraidWord::permutation() const {
  // at[p] = bottom strand currently at position p
  std::vector<int> at(strand_count_);
  std::iota(at.begin(), at.end(), 0);
  for (const auto& letter : letters_) {
    std::swap(at[letter.generator - 1], at[letter.generator]);
  }
  std::vector<int> perm(strand_count_);
  for (int p = 0; p < strand_count_; ++p) perm[at[p]] = p;
  return perm;
}

int BraidWord::cycle_count() const {
  const auto perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
    }
  }
  return cycles;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& letter : out) letter.sign = -letter.sign;
  return {strand_count_, std::move(out)};
}

BraidWord BraidWord::mirror() const {
  auto out = letters_;
  for (auto& letter : out) letter.sign = -letter.sign;
  return {strand_count_, std::move(out)};
}

BraidWord BraidWord::tensor(const BraidWord& other) const {
  auto out = letters_;
  for (auto letter : other.letters_) {
    letter.generator += strand_count_;
    out.push_back(letter);
  }
  return {strand_count_ + other.strand_count_, std::move(out)};
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& letter : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter.sign * letter.generator);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int strand_count) {
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    auto end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    const auto token = text.substr(i, end - i);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("braid token '" + std::string(token) +
                                  "' is not an integer");
    }
    if (value == 0) {
      throw std::invalid_argument("braid token 0 is not a generator");
    }
    if (std::abs(value) >= strand_count) {
      throw std::invalid_argument("braid token " + std::string(token) +
                                  " needs more than " +
                                  std::to_string(strand_count) + " strands");
    }
    letters.push_back({std::abs(value), value > 0 ? 1 : -1});
    i = end;
  }
  return {strand_count, std::move(letters)};
}

}  // namespace knotgirth
