#include "tritile/angle.hpp"

#include <cmath>

namespace tritile {

static const double kPi = 3.14159265358979323846;

double angle_value(AngleClass x, double alpha) {
    double v = x.j * (kPi / 3.0) + x.k * alpha;
    double twopi = 2.0 * kPi;
    v = std::fmod(v, twopi);
    if (v < 0) v += twopi;
    return v;
}

double span_value(AngleSpan s, double alpha) { return s.j * (kPi / 3.0) + s.k * alpha; }

std::string angle_to_string(AngleClass x) {
    return "(" + std::to_string(x.j) + "," + std::to_string(x.k) + ")";
}

}  // namespace tritile
