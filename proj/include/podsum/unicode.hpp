// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 / Unicode helpers for corpus text. Classification and case
// mapping are table-driven over code point ranges covering the scripts that
// actually occur in podcast metadata; exotic scripts fall back to identity.
namespace podsum::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point starting at s[i] and advances i past it.
// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& i);

void encode(char32_t cp, std::string& out);

// Number of Unicode scalar values in s.
std::size_t scalar_count(std::string_view s);

// True for letters, digits and combining marks: the characters that may
// appear inside a token.
bool is_word_char(char32_t cp);

bool is_space(char32_t cp);

// U+0027 and U+2019, the two apostrophes seen in practice.
bool is_apostrophe(char32_t cp);

// Simple 1:1 lowercase mapping (Latin, Greek, Cyrillic, Armenian and the
// common extended blocks). Code points without a mapping pass through.
char32_t to_lower(char32_t cp);

// Extended_Pictographic code points plus the emoji plumbing around them
// (variation selectors, ZWJ, keycap combiner, skin tones, regional
// indicators).
bool is_emoji(char32_t cp);

// Removes emoji code points (per is_emoji) from s.
std::string strip_emoji(std::string_view s);

// Trims leading/trailing Unicode whitespace.
std::string trim(std::string_view s);

} // namespace podsum::uni
