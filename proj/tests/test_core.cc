// tests/test_core.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "phonekit/core/corpus.h"
#include "phonekit/core/phoneme.h"
#include "phonekit/core/segments.h"

using namespace phonekit;

namespace {

SegmentRecord Seg(const std::string& utt, int idx, const std::string& label,
                  double start, double dur) {
  SegmentRecord s;
  s.utterance_id = utt;
  s.token_index = idx;
  s.label = PhonemeLabel(label);
  s.start_s = start;
  s.duration_s = dur;
  return s;
}

}  // namespace

TEST_CASE("label table accepts x-sampa and rejects junk") {
  LabelTable t = LabelTable::DefaultXsampa();
  for (const char* ok : {"a", "tS", "dZ", "i:", "s`", "h\\", "O", "@", "{",
                         "2", "N", "e~", "=n", "t_h", "r\\", "A:"}) {
    CHECK(t.Contains(ok));
  }
  CHECK_THROWS_AS(t.Parse(""), std::invalid_argument);
  CHECK_THROWS_AS(t.Parse("a b"), std::invalid_argument);
  CHECK_THROWS_AS(t.Parse("#foo"), std::invalid_argument);
  CHECK_THROWS_AS(t.Parse("é"), std::invalid_argument);

  LabelTable open = LabelTable::Open();
  CHECK(open.Parse("anything-goes").sym == "anything-goes");

  LabelTable custom(false);
  custom.AddAll({"a", "b"});
  CHECK(custom.Contains("a"));
  CHECK_FALSE(custom.Contains("c"));
}

TEST_CASE("pronunciation variants are deduplicated and non-empty") {
  PhonemeLabel a("a"), b("b");
  Pronunciation p("ab", {{a, b}, {a, b}, {b, a}});
  CHECK(p.variants().size() == 2);
  CHECK_THROWS_AS(Pronunciation("x", {}), std::invalid_argument);
  CHECK_THROWS_AS(Pronunciation("x", {{}}), std::invalid_argument);
}

TEST_CASE("reading mean mcd validation") {
  Reading r;
  r.reading_id = "r1";
  r.language_iso639_3 = "tgl";
  r.utterances.push_back({"u1", "text", "u1.wav", 1.0, 4.0});
  r.utterances.push_back({"u2", "text", "u2.wav", 1.0, 6.0});
  r.mean_mcd = 5.0;
  CHECK(ValidateReading(r).empty());
  r.mean_mcd = 5.5;
  CHECK(ValidateReading(r).size() == 1);
  r.mean_mcd.reset();
  r.utterances.push_back({"u1", "dup", "u3.wav", 1.0, {}});
  CHECK(ValidateReading(r).size() == 1);
}

TEST_CASE("annotate_context singleton") {
  auto segs = annotate_context({Seg("u", 0, "a", 0.0, 0.1)});
  CHECK_FALSE(segs[0].prev.has_value());
  CHECK_FALSE(segs[0].next.has_value());
}

TEST_CASE("annotate_context three tokens") {
  auto segs = annotate_context({Seg("u", 0, "a", 0.0, 0.1),
                                Seg("u", 1, "b", 0.1, 0.1),
                                Seg("u", 2, "c", 0.2, 0.1)});
  CHECK(segs[1].prev->sym == "a");
  CHECK(segs[1].next->sym == "c");
  CHECK_FALSE(segs[0].prev.has_value());
  CHECK_FALSE(segs[2].next.has_value());
}

TEST_CASE("annotate_context does not cross utterance boundaries") {
  // Brute-force oracle over a 5-token, 2-utterance fixture: within each
  // utterance the expected context is just the neighbouring label.
  std::vector<SegmentRecord> fix = {
      Seg("u1", 0, "a", 0.0, 0.1), Seg("u1", 1, "b", 0.1, 0.1),
      Seg("u1", 2, "c", 0.2, 0.1), Seg("u2", 0, "d", 0.0, 0.1),
      Seg("u2", 1, "e", 0.1, 0.1)};
  auto segs = annotate_context(fix);
  for (size_t i = 0; i < segs.size(); ++i) {
    std::optional<PhonemeLabel> want_prev, want_next;
    for (size_t j = 0; j < fix.size(); ++j) {
      if (fix[j].utterance_id != fix[i].utterance_id) continue;
      if (fix[j].token_index == fix[i].token_index - 1) want_prev = fix[j].label;
      if (fix[j].token_index == fix[i].token_index + 1) want_next = fix[j].label;
    }
    CHECK(segs[i].prev == want_prev);
    CHECK(segs[i].next == want_next);
  }
  CHECK_FALSE(segs[3].prev.has_value());  // u2 start sees no u1 context
}

TEST_CASE("annotate_context is idempotent and rejects duplicate indices") {
  std::vector<SegmentRecord> fix = {Seg("u", 0, "a", 0.0, 0.1),
                                    Seg("u", 1, "b", 0.1, 0.1)};
  auto once = annotate_context(fix);
  auto twice = annotate_context(once);
  for (size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].prev == twice[i].prev);
    CHECK(once[i].next == twice[i].next);
  }
  fix.push_back(Seg("u", 1, "c", 0.2, 0.1));
  CHECK_THROWS_AS(annotate_context(fix), std::invalid_argument);
}

TEST_CASE("build_inventory counts") {
  CHECK(build_inventory({}).empty());
  auto inv = build_inventory({Seg("u", 0, "a", 0, .1), Seg("u", 1, "a", .1, .1),
                              Seg("u", 2, "b", .2, .1)});
  CHECK(inv.at(PhonemeLabel("a")) == 2);
  CHECK(inv.at(PhonemeLabel("b")) == 1);
}

TEST_CASE("build_inventory matches an independent tally and is additive") {
  std::mt19937 rng(7);
  std::vector<std::string> syms = {"a", "e", "i", "o", "u", "s", "t"};
  std::vector<SegmentRecord> a, b;
  std::map<PhonemeLabel, size_t> tally;
  for (int i = 0; i < 100; ++i) {
    std::string sym = syms[rng() % syms.size()];
    auto& dst = (i < 60) ? a : b;
    dst.push_back(Seg(i < 60 ? "u1" : "u2", i % 60, sym, 0.01 * i, 0.01));
    ++tally[PhonemeLabel(sym)];
  }
  std::vector<SegmentRecord> both = a;
  both.insert(both.end(), b.begin(), b.end());
  CHECK(build_inventory(both) == tally);

  // build_inventory(concat(A,B)) == pointwise sum of the two inventories.
  auto ia = build_inventory(a);
  for (const auto& [label, count] : build_inventory(b)) ia[label] += count;
  CHECK(build_inventory(both) == ia);
}

TEST_CASE("validate_tiling") {
  Utterance utt{"u", "", "", 1.0, {}};
  std::vector<SegmentRecord> good = {Seg("u", 0, "a", 0.0, 0.5),
                                     Seg("u", 1, "b", 0.5, 0.5)};
  CHECK(validate_tiling(good, utt).empty());

  std::vector<SegmentRecord> overlap = {Seg("u", 0, "a", 0.0, 0.6),
                                        Seg("u", 1, "b", 0.5, 0.5)};
  auto v = validate_tiling(overlap, utt);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == TilingViolation::kOverlap);

  // Token ending 0.5 s past the utterance end: exactly one range violation.
  std::vector<SegmentRecord> past = {Seg("u", 0, "a", 0.0, 0.5),
                                     Seg("u", 1, "b", 0.5, 1.0)};
  v = validate_tiling(past, utt);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == TilingViolation::kOutOfRange);
  CHECK(v[0].token_index == 1);

  // Sub-quantum overlap from 0.1 ms serialization is tolerated.
  std::vector<SegmentRecord> quantized = {Seg("u", 0, "a", 0.0, 0.0063),
                                          Seg("u", 1, "b", 0.0062, 0.0063)};
  CHECK(validate_tiling(quantized, utt).empty());
}
