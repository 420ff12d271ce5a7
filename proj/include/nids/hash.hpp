// Copyright 2026 The nidsbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NIDS_HASH_HPP_
#define NIDS_HASH_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace nids {

// FNV-1a, 64 bit. Content fingerprinting only, not cryptographic.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t seed = 0xCBF29CE484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

/// FNV-1a over the file contents, hex encoded. Throws Error(io_error).
std::string file_checksum(const std::string& path);

}  // namespace nids

#endif  // NIDS_HASH_HPP_
