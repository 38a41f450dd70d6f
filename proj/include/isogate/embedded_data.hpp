#pragma once

// Data files under data/, compiled into the library.

#include <cstdint>
#include <string_view>

namespace isogate::data {

std::string_view x0_curves();
std::string_view cm_table();

/// 64-bit FNV-1a, used to detect edits to the bundled tables.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace isogate::data
