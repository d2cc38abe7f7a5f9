#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace minorforge::cli {

/// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace minorforge::cli
