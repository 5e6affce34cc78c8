// phonekit/core/segments.h

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

#ifndef PHONEKIT_CORE_SEGMENTS_H_
#define PHONEKIT_CORE_SEGMENTS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phonekit/core/corpus.h"
#include "phonekit/core/phoneme.h"

namespace phonekit {

/// Provenance of a segment's pronunciation.
enum class PronSource { kDeterministicG2p, kLexicon, kExternal };

std::string PronSourceName(PronSource s);
PronSource PronSourceFromName(const std::string& name);

/// One aligned phoneme token: standoff markup referring to its utterance
/// audio by time offsets.
struct SegmentRecord {
  std::string utterance_id;
  int token_index = 0;                 // position within the utterance
  PhonemeLabel label;
  std::optional<PhonemeLabel> prev;    // adjacent labels within the utterance
  std::optional<PhonemeLabel> next;
  double start_s = 0.0;
  double duration_s = 0.0;
  std::optional<std::string> word;     // orthographic word, if any
  PronSource source = PronSource::kExternal;

  double mid_s() const { return start_s + 0.5 * duration_s; }
  double end_s() const { return start_s + duration_s; }
};

// Fills prev/next from the neighbouring records of the same utterance.
// Input must be ordered by token_index within each utterance (utterances may
// be concatenated; context never crosses an utterance boundary).  Context is
// annotated across word boundaries within an utterance.  Idempotent.
// Throws std::invalid_argument on duplicate token_index within an utterance.
std::vector<SegmentRecord> annotate_context(std::vector<SegmentRecord> segments);

// Token counts per label; counts sum to segments.size().
std::map<PhonemeLabel, size_t> build_inventory(
    const std::vector<SegmentRecord>& segments);

struct TilingViolation {
  enum Kind { kOverlap, kOutOfRange, kOrder, kNonPositiveDuration } kind;
  std::string utterance_id;
  int token_index;
  std::string detail;
};

// Checks the per-utterance tiling invariants: segments sorted by token_index
// must be non-decreasing in start_s and non-overlapping, and must end within
// the utterance duration plus one frame step.  Overlaps smaller than
// overlap_tol_s are ignored (serialized times are quantized to 0.1 ms, so
// adjacent boundaries can disagree by up to one quantum).  Violations are
// returned as data, never thrown.
std::vector<TilingViolation> validate_tiling(
    const std::vector<SegmentRecord>& segments, const Utterance& utterance,
    double frame_step_s = 0.00625, double overlap_tol_s = 1.5e-4);

}  // namespace phonekit

#endif  // PHONEKIT_CORE_SEGMENTS_H_
