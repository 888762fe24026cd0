#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tritile {

// Exact rational scalar. All symbolic length bookkeeping runs on these;
// doubles appear only where geometry meets the floating-point plane.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", and decimal strings like "1.25" (exact).
Rat parse_rat(const std::string& text);

std::string rat_to_string(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root when the rational is a perfect square, nullopt otherwise.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

}  // namespace tritile
