// core/corpus.cc

// Copyright 2026  Phonekit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "phonekit/core/corpus.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace phonekit {

Pronunciation::Pronunciation(std::string word,
                             std::vector<std::vector<PhonemeLabel>> variants)
    : word_(std::move(word)) {
  if (variants.empty())
    throw std::invalid_argument("pronunciation of '" + word_ +
                                "' has no variants");
  for (auto& v : variants) AddVariant(std::move(v));
}

void Pronunciation::AddVariant(std::vector<PhonemeLabel> v) {
  if (v.empty())
    throw std::invalid_argument("empty pronunciation variant for '" + word_ +
                                "'");
  if (std::find(variants_.begin(), variants_.end(), v) == variants_.end())
    variants_.push_back(std::move(v));
}

const Utterance* Reading::FindUtterance(const std::string& id) const {
  for (const auto& u : utterances)
    if (u.id == id) return &u;
  return nullptr;
}

std::optional<double> Reading::ComputeMeanMcd() const {
  double sum = 0.0;
  size_t n = 0;
  for (const auto& u : utterances) {
    if (u.mcd) {
      sum += *u.mcd;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::vector<std::string> ValidateReading(const Reading& reading) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& u : reading.utterances) {
    if (!seen.insert(u.id).second)
      problems.push_back("duplicate utterance id: " + u.id);
    if (u.duration_s < 0)
      problems.push_back("negative duration in utterance " + u.id);
    if (u.mcd && *u.mcd < 0)
      problems.push_back("negative mcd in utterance " + u.id);
  }
  if (reading.mean_mcd) {
    auto computed = reading.ComputeMeanMcd();
    if (computed && std::abs(*computed - *reading.mean_mcd) > 1e-9)
      problems.push_back("mean_mcd does not match utterance mcd values");
  }
  return problems;
}

}  // namespace phonekit
