#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace unirank {

// The four unimodal-sequence families: plain peak (u), double peak (w),
// Durfee-restricted descents (v), odd/even with overlines (nu).
enum class Family { u, w, v, nu };

inline constexpr std::array<Family, 4> all_families{Family::u, Family::w, Family::v, Family::nu};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::u: return "u";
        case Family::w: return "w";
        case Family::v: return "v";
        case Family::nu: return "nu";
    }
    throw std::logic_error("family_name: bad enum");
}

inline Family family_from_name(const std::string& s) {
    if (s == "u") return Family::u;
    if (s == "w") return Family::w;
    if (s == "v") return Family::v;
    if (s == "nu") return Family::nu;
    throw std::invalid_argument("unknown family '" + s + "' (expected u, w, v or nu)");
}

} // namespace unirank
