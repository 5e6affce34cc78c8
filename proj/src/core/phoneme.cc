// core/phoneme.cc

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

#include "phonekit/core/phoneme.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phonekit {

namespace {

bool IsXsampaBaseChar(unsigned char c) {
  if (std::isalpha(c)) return true;
  if (c >= '1' && c <= '9') return true;
  switch (c) {
    case '@': case '{': case '}': case '&': case '?':
    case '.': case '"': case '%': case '\'': case '|': case '!':
      return true;
    default:
      return false;
  }
}

// Structural check: the symbol must decompose into X-SAMPA base characters,
// optional backslash variants (h\, s\, O\ ...) and suffix diacritics
// (length ':', retroflex '`', nasal '~', syllabic '=', underscore forms
// like _h _d _< ...).  Compound labels such as "tS" or "i:" pass; arbitrary
// text does not.
bool LooksLikeXsampa(const std::string& s) {
  size_t i = 0;
  int bases = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (IsXsampaBaseChar(c)) {
      ++bases;
      ++i;
      if (i < s.size() && s[i] == '\\') ++i;
    } else if (c == '=' && bases == 0) {
      ++i;  // syllabicity written as a prefix, e.g. =n
    } else if ((c == ':' || c == '`' || c == '~' || c == '=') && bases > 0) {
      ++i;
      if (c == ':' && i < s.size() && s[i] == '\\') ++i;  // half-long ":\"
    } else if (c == '_' && bases > 0 && i + 1 < s.size() &&
               !std::isspace(static_cast<unsigned char>(s[i + 1]))) {
      i += 2;
      if (i < s.size() && s[i] == '\\') ++i;
    } else {
      return false;
    }
  }
  return bases >= 1;
}

bool HasWhitespace(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

LabelTable LabelTable::DefaultXsampa() {
  LabelTable t(false);
  t.xsampa_grammar_ = true;
  return t;
}

LabelTable LabelTable::Open() { return LabelTable(true); }

void LabelTable::Add(const std::string& symbol) {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) symbols_.insert(it, symbol);
}

void LabelTable::AddAll(const std::vector<std::string>& symbols) {
  for (const auto& s : symbols) Add(s);
}

LabelTable LabelTable::FromFile(const std::string& path, bool allow_unknown) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label table: " + path);
  LabelTable t(allow_unknown);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string sym;
    if (!(ss >> sym) || sym[0] == '#') continue;
    t.Add(sym);
  }
  return t;
}

bool LabelTable::Contains(const std::string& symbol) const {
  if (std::binary_search(symbols_.begin(), symbols_.end(), symbol)) return true;
  return xsampa_grammar_ && LooksLikeXsampa(symbol);
}

PhonemeLabel LabelTable::Parse(const std::string& symbol) const {
  if (symbol.empty())
    throw std::invalid_argument("empty phoneme label");
  if (HasWhitespace(symbol))
    throw std::invalid_argument("phoneme label contains whitespace: '" +
                                symbol + "'");
  if (!allow_unknown_ && !Contains(symbol))
    throw std::invalid_argument("unknown phoneme label: '" + symbol + "'");
  return PhonemeLabel(symbol);
}

std::vector<PhonemeLabel> LabelTable::ParseSequence(
    const std::string& text) const {
  std::vector<PhonemeLabel> out;
  std::istringstream ss(text);
  std::string sym;
  while (ss >> sym) out.push_back(Parse(sym));
  return out;
}

}  // namespace phonekit
