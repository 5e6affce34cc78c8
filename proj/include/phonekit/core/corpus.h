// phonekit/core/corpus.h

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

#ifndef PHONEKIT_CORE_CORPUS_H_
#define PHONEKIT_CORE_CORPUS_H_

#include <optional>
#include <string>
#include <vector>

#include "phonekit/core/phoneme.h"

namespace phonekit {

/// A word together with its candidate pronunciations.  Variants are kept
/// in source order, non-empty, and deduplicated.
class Pronunciation {
 public:
  Pronunciation(std::string word,
                std::vector<std::vector<PhonemeLabel>> variants);

  const std::string& word() const { return word_; }
  const std::vector<std::vector<PhonemeLabel>>& variants() const {
    return variants_;
  }

  // Appends a variant unless an identical one is already present.
  void AddVariant(std::vector<PhonemeLabel> v);

 private:
  std::string word_;
  std::vector<std::vector<PhonemeLabel>> variants_;
};

struct Utterance {
  std::string id;
  std::string text;
  std::string audio_ref;            // path or URI of the audio
  double duration_s = 0.0;
  std::optional<double> mcd;        // per-utterance alignment quality
};

struct Reading {
  std::string reading_id;
  std::string language_iso639_3;    // 3-letter code
  std::vector<Utterance> utterances;
  std::optional<double> mean_mcd;

  const Utterance* FindUtterance(const std::string& id) const;

  // Mean over the utterance mcd values that are present; empty if none are.
  std::optional<double> ComputeMeanMcd() const;
};

// Structural checks: unique utterance ids, nonnegative durations/mcd, and
// mean_mcd consistent with the utterance values (tolerance 1e-9) when both
// are present.  Returns human-readable problems; empty means valid.
std::vector<std::string> ValidateReading(const Reading& reading);

}  // namespace phonekit

#endif  // PHONEKIT_CORE_CORPUS_H_
