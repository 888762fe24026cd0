#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace tritile {

// Direction classes. Every edge direction occurring in a tiling by a tile
// with angles (alpha, pi/3 - alpha, 2pi/3) can be written as
//
//     j * (pi/3) + k * alpha,   j in {0..5} (mod 6), k integer,
//
// and when alpha is not a rational multiple of pi the pair (j, k) is unique.
// All angle reasoning is done on these pairs; alpha's numeric value enters
// only when coordinates are needed.
struct AngleClass {
    int j = 0;  // multiples of pi/3, canonical range [0, 6)
    int k = 0;  // multiples of alpha

    friend bool operator==(const AngleClass&, const AngleClass&) = default;
    auto operator<=>(const AngleClass&) const = default;
};

inline int mod6(int j) {
    int r = j % 6;
    return r < 0 ? r + 6 : r;
}

inline AngleClass angle_class(int j, int k) { return AngleClass{mod6(j), k}; }

inline AngleClass angle_add(AngleClass x, AngleClass y) { return angle_class(x.j + y.j, x.k + y.k); }

inline AngleClass angle_sub(AngleClass x, AngleClass y) { return angle_class(x.j - y.j, x.k - y.k); }

// Rotation by pi.
inline AngleClass angle_negate_dir(AngleClass x) { return angle_class(x.j + 3, x.k); }

// Additive inverse: theta -> -theta (mod 2pi in the j part).
inline AngleClass angle_opposite(AngleClass x) { return angle_class(-x.j, -x.k); }

// (-1)^j. Flips under rotation by pi, multiplicative over angle_add.
inline int zh_sign(AngleClass x) { return (x.j % 2 == 0) ? 1 : -1; }

double angle_value(AngleClass x, double alpha);  // radians, in [0, 2pi) up to k*alpha wraps

std::string angle_to_string(AngleClass x);

// Unreduced angle measure j*(pi/3) + k*alpha with j ranging over all of Z.
// Used for wedge widths and turning sums, where the winding matters and the
// mod-6 reduction of AngleClass would lose it.
struct AngleSpan {
    int j = 0;
    int k = 0;

    friend bool operator==(const AngleSpan&, const AngleSpan&) = default;
};

inline AngleSpan span_add(AngleSpan x, AngleSpan y) { return AngleSpan{x.j + y.j, x.k + y.k}; }
inline AngleSpan span_sub(AngleSpan x, AngleSpan y) { return AngleSpan{x.j - y.j, x.k - y.k}; }
double span_value(AngleSpan s, double alpha);

inline AngleSpan span_alpha() { return AngleSpan{0, 1}; }
inline AngleSpan span_beta() { return AngleSpan{1, -1}; }
inline AngleSpan span_gamma() { return AngleSpan{2, 0}; }

}  // namespace tritile

template <>
struct std::hash<tritile::AngleClass> {
    size_t operator()(const tritile::AngleClass& a) const {
        return std::hash<long long>()(static_cast<long long>(a.j) * 1000003LL + a.k);
    }
};
