#pragma once

#include <string>
#include <string_view>

namespace hitratio {

/// Lowercases ASCII letters and strips a single leading '#'. Two hashtag
/// spellings denote the same label iff their canonical forms are equal.
std::string canonical_label(std::string_view label);

/// Canonical form with the '#' prefix restored, e.g. "#iPhone" -> "#iphone".
std::string display_label(std::string_view label);

/// ASCII-only lowercase; bytes >= 0x80 pass through unchanged.
std::string ascii_lower(std::string_view text);

}  // namespace hitratio
