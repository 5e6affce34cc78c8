// core/segments.cc

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

#include "phonekit/core/segments.h"

#include <set>
#include <sstream>
#include <stdexcept>

namespace phonekit {

std::string PronSourceName(PronSource s) {
  switch (s) {
    case PronSource::kDeterministicG2p: return "deterministic-g2p";
    case PronSource::kLexicon: return "lexicon";
    case PronSource::kExternal: return "external";
  }
  return "external";
}

PronSource PronSourceFromName(const std::string& name) {
  if (name == "deterministic-g2p") return PronSource::kDeterministicG2p;
  if (name == "lexicon") return PronSource::kLexicon;
  if (name == "external") return PronSource::kExternal;
  throw std::invalid_argument("unknown pronunciation source: '" + name + "'");
}

std::vector<SegmentRecord> annotate_context(
    std::vector<SegmentRecord> segments) {
  // Group boundaries: runs of equal utterance_id.
  size_t begin = 0;
  while (begin < segments.size()) {
    size_t end = begin + 1;
    while (end < segments.size() &&
           segments[end].utterance_id == segments[begin].utterance_id)
      ++end;
    std::set<int> indices;
    for (size_t i = begin; i < end; ++i) {
      if (!indices.insert(segments[i].token_index).second) {
        std::ostringstream msg;
        msg << "duplicate token_index " << segments[i].token_index
            << " in utterance " << segments[i].utterance_id;
        throw std::invalid_argument(msg.str());
      }
    }
    for (size_t i = begin; i < end; ++i) {
      segments[i].prev = (i > begin)
                             ? std::optional<PhonemeLabel>(segments[i - 1].label)
                             : std::nullopt;
      segments[i].next = (i + 1 < end)
                             ? std::optional<PhonemeLabel>(segments[i + 1].label)
                             : std::nullopt;
    }
    begin = end;
  }
  return segments;
}

std::map<PhonemeLabel, size_t> build_inventory(
    const std::vector<SegmentRecord>& segments) {
  std::map<PhonemeLabel, size_t> counts;
  for (const auto& s : segments) ++counts[s.label];
  return counts;
}

std::vector<TilingViolation> validate_tiling(
    const std::vector<SegmentRecord>& segments, const Utterance& utterance,
    double frame_step_s, double overlap_tol_s) {
  std::vector<TilingViolation> out;
  const SegmentRecord* prev = nullptr;
  for (const auto& s : segments) {
    if (s.utterance_id != utterance.id) continue;
    if (s.duration_s <= 0) {
      out.push_back({TilingViolation::kNonPositiveDuration, s.utterance_id,
                     s.token_index, "duration_s must be > 0"});
    }
    if (s.start_s < 0 ||
        s.end_s() > utterance.duration_s + frame_step_s) {
      std::ostringstream msg;
      msg << "segment [" << s.start_s << ", " << s.end_s()
          << "] outside utterance of " << utterance.duration_s << " s";
      out.push_back({TilingViolation::kOutOfRange, s.utterance_id,
                     s.token_index, msg.str()});
    }
    if (prev != nullptr) {
      if (s.start_s < prev->start_s) {
        out.push_back({TilingViolation::kOrder, s.utterance_id, s.token_index,
                       "start_s decreases"});
      } else if (s.start_s < prev->end_s() - overlap_tol_s) {
        std::ostringstream msg;
        msg << "overlaps previous token ending at " << prev->end_s();
        out.push_back({TilingViolation::kOverlap, s.utterance_id,
                       s.token_index, msg.str()});
      }
    }
    prev = &s;
  }
  return out;
}

}  // namespace phonekit
