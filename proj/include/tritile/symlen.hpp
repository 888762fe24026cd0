#pragma once

#include "tritile/rat.hpp"

#include <array>
#include <string>

namespace tritile {

enum class SideLabel : uint8_t { A = 0, B = 1, C = 2 };

inline char side_char(SideLabel s) { return "abc"[static_cast<int>(s)]; }
SideLabel side_from_char(char ch);

struct TileSpec;

// Symbolic length: qa*a + qb*b + qc*c with exact rational coefficients.
struct SymLen {
    std::array<Rat, 3> q{Rat(0), Rat(0), Rat(0)};

    SymLen() = default;
    SymLen(Rat qa, Rat qb, Rat qc) : q{std::move(qa), std::move(qb), std::move(qc)} {}

    static SymLen unit(SideLabel s) {
        SymLen v;
        v.q[static_cast<int>(s)] = 1;
        return v;
    }
    static SymLen zero() { return SymLen(); }

    SymLen& operator+=(const SymLen& o) {
        for (int i = 0; i < 3; i++) q[i] += o.q[i];
        return *this;
    }
    SymLen& operator-=(const SymLen& o) {
        for (int i = 0; i < 3; i++) q[i] -= o.q[i];
        return *this;
    }
    friend SymLen operator+(SymLen x, const SymLen& y) { return x += y; }
    friend SymLen operator-(SymLen x, const SymLen& y) { return x -= y; }
    friend SymLen operator*(const Rat& s, SymLen x) {
        for (auto& c : x.q) c *= s;
        return x;
    }
    friend SymLen operator-(SymLen x) {
        for (auto& c : x.q) c = -c;
        return x;
    }
    friend bool operator==(const SymLen&, const SymLen&) = default;

    bool is_zero() const { return q[0] == 0 && q[1] == 0 && q[2] == 0; }

    double eval(const TileSpec& spec) const;
    std::string to_string() const;  // e.g. "2a - b + 1/3c"
};

// A value of the zh invariant. Same vector space as SymLen; the alias keeps
// signatures honest about what a quantity means.
using ZhValue = SymLen;

}  // namespace tritile
