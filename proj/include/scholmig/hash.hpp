#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace scholmig {

// FNV-1a, 64 bit. Used for feature hashing and content fingerprints; the
// exact constants matter because hashed token indices are part of the
// serialized model format.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = kFnvOffset) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

// Fingerprint of a whole file's bytes; throws DataError if unreadable.
std::uint64_t hash_file(const std::string &path);

} // namespace scholmig
