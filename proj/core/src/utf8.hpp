#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace fakenews::detail {

inline constexpr char32_t kInvalidCodePoint = 0xFFFFFFFF;

// Decodes one code point starting at text[pos] and advances pos. Malformed or
// overlong sequences yield kInvalidCodePoint and consume a single byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos) noexcept;

void append_utf8(std::string& out, char32_t cp);

// Letters and digits. ASCII is exact; outside ASCII every code point counts
// except the punctuation, symbol and space blocks.
bool is_word_char(char32_t cp) noexcept;

// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
// Greek, Cyrillic); other code points map to themselves.
char32_t to_lower(char32_t cp) noexcept;

std::size_t code_point_count(std::string_view text) noexcept;

}  // namespace fakenews::detail
