#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace prodkit {

// Tokenization settings. The index itself honors `lowercase` and the
// stoplist (stoplisted tokens are dropped before counting, which only
// matters when a stoplist is supplied at indexing time); `min_length`
// and the stoplist together define the content-word filter used when
// sampling bases.
struct TokenizerConfig {
  bool lowercase = true;
  std::uint32_t min_length = 3;  // in code points
  std::unordered_set<std::string> stoplist;

  // Stable hash of the configuration, recorded in index metadata so a
  // persisted index can be matched to the settings that produced it.
  std::uint64_t config_hash() const;
};

namespace text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at `pos` and advances `pos`. Invalid
// sequences yield U+FFFD and advance by a single byte.
char32_t decode_utf8(std::string_view s, std::size_t& pos);

void encode_utf8(char32_t cp, std::string& out);

// Letter classification over the script ranges this toolkit supports:
// ASCII, Latin-1 supplement, Latin Extended-A/B, Greek, Cyrillic
// (including the supplement block). Everything else is a separator.
bool is_word_letter(char32_t cp);

// Lowercases ASCII, Latin-1, Greek and Cyrillic capitals; other letters
// are returned unchanged.
char32_t to_lower(char32_t cp);

std::size_t count_codepoints(std::string_view s);

// Splits UTF-8 text into canonical tokens: maximal runs of letters with
// single internal hyphens or apostrophes (never leading or trailing).
// U+2019 is folded to ' and U+2010/U+2011 to -. Honors cfg.lowercase;
// ignores min_length and the stoplist (callers filter).
void tokenize(std::string_view line, const TokenizerConfig& cfg,
              const std::function<void(std::string&&)>& sink);

}  // namespace text

// True iff `word` is at least cfg.min_length code points long, consists
// of letters with at most single internal hyphens/apostrophes, and is
// not stoplisted.
bool is_content_word(std::string_view word, const TokenizerConfig& cfg);

}  // namespace prodkit
