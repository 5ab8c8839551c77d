#pragma once

#include <string>
#include <string_view>

namespace rpys::utf8 {

/// Replaces every malformed UTF-8 sequence (stray continuation bytes,
/// overlongs, surrogates, truncated sequences, code points above U+10FFFF)
/// with U+FFFD. Valid input is returned unchanged.
std::string sanitize(std::string_view bytes);

bool is_valid(std::string_view bytes);

/// Decodes valid UTF-8 into code points. Malformed bytes decode to U+FFFD,
/// so this never fails.
std::u32string decode(std::string_view bytes);

}  // namespace rpys::utf8
