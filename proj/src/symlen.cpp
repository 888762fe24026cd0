#include "tritile/symlen.hpp"

#include "tritile/spec.hpp"

#include <stdexcept>

namespace tritile {

SideLabel side_from_char(char ch) {
    switch (ch) {
        case 'a': return SideLabel::A;
        case 'b': return SideLabel::B;
        case 'c': return SideLabel::C;
        default: throw std::invalid_argument(std::string("side_from_char: '") + ch + "'");
    }
}

double SymLen::eval(const TileSpec& spec) const {
    return rat_to_double(q[0]) * spec.a + rat_to_double(q[1]) * spec.b + rat_to_double(q[2]) * spec.c;
}

std::string SymLen::to_string() const {
    std::string out;
    for (int i = 0; i < 3; i++) {
        if (q[i] == 0) continue;
        Rat coef = q[i];
        if (out.empty()) {
            if (coef < 0) out += "-";
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        Rat mag = abs(coef);
        if (mag != 1) out += rat_to_string(mag);
        out += side_char(static_cast<SideLabel>(i));
    }
    return out.empty() ? "0" : out;
}

}  // namespace tritile
