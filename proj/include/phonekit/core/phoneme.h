// phonekit/core/phoneme.h

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

#ifndef PHONEKIT_CORE_PHONEME_H_
#define PHONEKIT_CORE_PHONEME_H_

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace phonekit {

/// One phoneme-level label in X-SAMPA notation ("a", "tS", "i:", ...).
/// The label text never contains whitespace.
struct PhonemeLabel {
  std::string sym;

  PhonemeLabel() = default;
  explicit PhonemeLabel(std::string s) : sym(std::move(s)) {}

  auto operator<=>(const PhonemeLabel&) const = default;
  bool empty() const { return sym.empty(); }
};

// Reserved label for the optional-silence model.
inline const PhonemeLabel kSilenceLabel{"sil"};

/// The set of label symbols the toolkit accepts.  Parsing a symbol that is
/// not in the table fails unless the table was opened with allow_unknown.
class LabelTable {
 public:
  // Built-in X-SAMPA segment inventory (base symbols plus the usual
  // length/retroflex/affricate combinations seen in pronunciation data).
  static LabelTable DefaultXsampa();

  // Empty table that accepts anything; for synthetic data and tests.
  static LabelTable Open();

  explicit LabelTable(bool allow_unknown = false)
      : allow_unknown_(allow_unknown) {}

  void Add(const std::string& symbol);
  void AddAll(const std::vector<std::string>& symbols);

  // Loads one symbol per line, '#' comments allowed.
  static LabelTable FromFile(const std::string& path,
                             bool allow_unknown = false);

  bool Contains(const std::string& symbol) const;
  bool AllowsUnknown() const { return allow_unknown_; }
  size_t Size() const { return symbols_.size(); }

  // Validates and wraps a symbol.  Throws std::invalid_argument on empty
  // symbols, embedded whitespace, or unknown symbols in a strict table.
  PhonemeLabel Parse(const std::string& symbol) const;

  // Parses a space-separated label sequence.
  std::vector<PhonemeLabel> ParseSequence(const std::string& text) const;

 private:
  std::vector<std::string> symbols_;  // sorted, unique
  bool allow_unknown_ = false;
  bool xsampa_grammar_ = false;  // accept structurally valid X-SAMPA
};

}  // namespace phonekit

template <>
struct std::hash<phonekit::PhonemeLabel> {
  size_t operator()(const phonekit::PhonemeLabel& l) const noexcept {
    return std::hash<std::string>{}(l.sym);
  }
};

#endif  // PHONEKIT_CORE_PHONEME_H_
