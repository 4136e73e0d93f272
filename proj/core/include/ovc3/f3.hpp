#pragma once

#include <cstdint>
#include <stdexcept>

#include "ovc3/power_series.hpp"

namespace ovc3 {

// The field with three elements, as a power-series coefficient type.
struct F3 {
    uint8_t v{0};

    F3() = default;
    explicit F3(int x) {
        int r = x % 3;
        v = static_cast<uint8_t>(r < 0 ? r + 3 : r);
    }

    friend F3 operator+(F3 a, F3 b) { return F3(a.v + b.v); }
    friend F3 operator-(F3 a, F3 b) { return F3(a.v + 3 - b.v); }
    friend F3 operator*(F3 a, F3 b) { return F3(a.v * b.v); }
    F3 operator-() const { return F3(3 - v); }
    friend bool operator==(F3 a, F3 b) { return a.v == b.v; }
    friend bool operator!=(F3 a, F3 b) { return a.v != b.v; }
};

template <>
struct RingTraits<F3> {
    static F3 zero_like(const F3&) { return F3(0); }
    static F3 one_like(const F3&) { return F3(1); }
    static bool is_zero(const F3& a) { return a.v == 0; }
    static F3 invert(const F3& a) {
        if (a.v == 0) throw std::domain_error("F3: inverting zero");
        return a; // 1 and 2 are self-inverse mod 3
    }
};

using F3Series = PowSeries<F3>;

// Reduction of a CycElt series to the residue field.
inline F3Series residue_series_of(const PowSeries<CycElt>& a) {
    return map_series<F3>(a, [](const CycElt& z) { return F3(z.residue()); });
}

} // namespace ovc3
