#include "rsl/hexcodec.hpp"

#include <cctype>

#include "rsl/errors.hpp"

namespace rsl {

namespace {
int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::vector<int> decode_hex_signs(const std::string& hex, int len) {
  if (len < 1) throw BadHex("decode_hex: length must be positive");
  if (hex.empty()) throw BadHex("decode_hex: empty string");
  const int total = 4 * static_cast<int>(hex.size());
  if (total < len)
    throw BadHex("decode_hex: \"" + hex + "\" has fewer than " +
                 std::to_string(len) + " bits");
  std::vector<int> bits;
  bits.reserve(static_cast<size_t>(total));
  for (char c : hex) {
    const int v = hex_digit(c);
    if (v < 0) throw BadHex(std::string("decode_hex: invalid character '") + c + "'");
    for (int k = 3; k >= 0; --k) bits.push_back((v >> k) & 1);
  }
  const int drop = total - len;
  for (int i = 0; i < drop; ++i)
    if (bits[static_cast<size_t>(i)] != 0)
      throw BadHex("decode_hex: \"" + hex + "\" does not fit in " +
                   std::to_string(len) + " bits (nonzero discarded prefix)");
  std::vector<int> signs(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j)
    signs[static_cast<size_t>(j)] = bits[static_cast<size_t>(drop + j)] ? -1 : 1;
  return signs;
}

LittlewoodSeq decode_hex(const std::string& hex, int len) {
  return LittlewoodSeq(decode_hex_signs(hex, len));
}

std::string encode_hex(const std::vector<int>& signs) {
  const int len = static_cast<int>(signs.size());
  if (len < 1) throw BadHex("encode_hex: empty sequence");
  const int digits = (len + 3) / 4;
  const int pad = 4 * digits - len;
  std::string out(static_cast<size_t>(digits), '0');
  for (int j = 0; j < len; ++j) {
    const int s = signs[static_cast<size_t>(j)];
    if (s != 1 && s != -1) throw NotLittlewood("encode_hex: coefficients must be +-1");
    if (s == -1) {
      const int pos = pad + j;
      const int digit = pos / 4;
      const int bit = 3 - pos % 4;
      const int cur = hex_digit(out[static_cast<size_t>(digit)]);
      const int next = cur | (1 << bit);
      out[static_cast<size_t>(digit)] =
          static_cast<char>(next < 10 ? '0' + next : 'A' + next - 10);
    }
  }
  return out;
}

std::string encode_hex(const LittlewoodSeq& seq) { return encode_hex(seq.signs()); }

std::string encode_hex(std::uint64_t bits, int len) {
  return encode_hex(LittlewoodSeq(len, bits));
}

}  // namespace rsl
