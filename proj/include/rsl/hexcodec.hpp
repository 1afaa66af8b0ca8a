#pragma once

#include <string>
#include <vector>

#include "rsl/poly.hpp"

namespace rsl {

// Table seed codec: each hex digit expands to 4 bits, surplus leading bits
// must be 0, bit 0 -> +1 and bit 1 -> -1 in exponent order 0..len-1.
std::vector<int> decode_hex_signs(const std::string& hex, int len);
LittlewoodSeq decode_hex(const std::string& hex, int len);

// Minimal-width encoding: ceil(len/4) uppercase digits, zero-padded left.
std::string encode_hex(const std::vector<int>& signs);
std::string encode_hex(const LittlewoodSeq& seq);
std::string encode_hex(std::uint64_t bits, int len);

}  // namespace rsl
