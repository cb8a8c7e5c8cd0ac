#pragma once

#include <string>
#include <string_view>

namespace fakenews {

// Porter (1980) suffix-stripping stemmer, steps 1a through 5b, following the
// published ANSI C reference implementation (including its "bli" -> "ble" and
// "logi" -> "log" step 2 rules).
//
// Only tokens made entirely of 'a'..'z' are stemmed; anything else (digits,
// capitals, non-ASCII) is returned unchanged. Words of one or two letters are
// never changed.
std::string porter_stem(std::string_view token);

}  // namespace fakenews
