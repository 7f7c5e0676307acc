#include "qgb/hexio.hpp"

#include <bit>
#include <cstdint>

#include "qgb/error.hpp"

namespace qgb {

static const char* kHex = "0123456789abcdef";

std::string doubles_to_hex(const std::vector<double>& v) {
  std::string out;
  out.reserve(v.size() * 16);
  for (double d : v) {
    const uint64_t bits = std::bit_cast<uint64_t>(d);
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kHex[(bits >> shift) & 0xF]);
  }
  return out;
}

std::vector<double> hex_to_doubles(const std::string& hex) {
  if (hex.size() % 16 != 0) throw IngestError("hex double block has bad length");
  std::vector<double> out(hex.size() / 16);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t bits = 0;
    for (size_t k = 0; k < 16; ++k) {
      const char c = hex[i * 16 + k];
      uint64_t nib;
      if (c >= '0' && c <= '9')
        nib = c - '0';
      else if (c >= 'a' && c <= 'f')
        nib = 10 + (c - 'a');
      else
        throw IngestError("bad hex digit in double block");
      bits = (bits << 4) | nib;
    }
    out[i] = std::bit_cast<double>(bits);
  }
  return out;
}

}  // namespace qgb
