#include "tritile/spec.hpp"

#include <cmath>
#include <stdexcept>

namespace tritile {

static const double kPi = 3.14159265358979323846;

std::string to_string(AngleMode m) {
    switch (m) {
        case AngleMode::Incommensurable: return "incommensurable";
        case AngleMode::Commensurable: return "commensurable";
        default: return "unknown";
    }
}
std::string to_string(SideMode m) {
    switch (m) {
        case SideMode::Commensurable: return "commensurable";
        case SideMode::Incommensurable: return "incommensurable";
        default: return "unknown";
    }
}
AngleMode angle_mode_from_string(const std::string& s) {
    if (s == "incommensurable") return AngleMode::Incommensurable;
    if (s == "commensurable") return AngleMode::Commensurable;
    if (s == "unknown") return AngleMode::Unknown;
    throw std::invalid_argument("bad angle_mode '" + s + "'");
}
SideMode side_mode_from_string(const std::string& s) {
    if (s == "incommensurable") return SideMode::Incommensurable;
    if (s == "commensurable") return SideMode::Commensurable;
    if (s == "unknown") return SideMode::Unknown;
    throw std::invalid_argument("bad side_mode '" + s + "'");
}

double TileSpec::beta() const { return kPi / 3.0 - alpha; }

TileSpec make_spec(double a, double b, std::optional<double> alpha, AngleMode am, SideMode sm) {
    TileSpec s;
    s.a = a;
    s.b = b;
    s.c = std::sqrt(a * a + a * b + b * b);
    s.alpha = alpha ? *alpha : std::acos((b * b + s.c * s.c - a * a) / (2.0 * b * s.c));
    s.angle_mode = am;
    s.side_mode = sm;
    return s;
}

TileSpec make_spec_exact(const Rat& a, const Rat& b, AngleMode am, SideMode sm) {
    TileSpec s;
    s.a_exact = a;
    s.b_exact = b;
    s.a = rat_to_double(a);
    s.b = rat_to_double(b);
    Rat c2 = a * a + a * b + b * b;
    if (auto root = rat_sqrt_exact(c2)) {
        s.c_exact = *root;
        s.c = rat_to_double(*root);
    } else {
        s.c = std::sqrt(rat_to_double(c2));
    }
    s.alpha = std::acos((s.b * s.b + s.c * s.c - s.a * s.a) / (2.0 * s.b * s.c));
    s.angle_mode = am;
    s.side_mode = sm;
    return s;
}

static bool niven_exceptional(const Rat& cosine) {
    return cosine == 0 || cosine == rat(1, 2) || cosine == rat(-1, 2) || cosine == 1 || cosine == -1;
}

SpecReport check_tile_spec(const TileSpec& spec, double eps) {
    SpecReport rep;
    if (!(spec.a > 0) || !(spec.b > 0) || !(spec.c > 0)) {
        rep.errors.push_back("sides must be positive");
        return rep;
    }

    bool all_exact = spec.a_exact && spec.b_exact && spec.c_exact;
    if (all_exact) {
        Rat resid = *spec.c_exact * *spec.c_exact -
                    (*spec.a_exact * *spec.a_exact + *spec.a_exact * *spec.b_exact + *spec.b_exact * *spec.b_exact);
        if (resid != 0) rep.errors.push_back("c^2 = a^2 + ab + b^2 fails exactly: residual " + rat_to_string(resid));
        rep.law_cos_residual = 0.0;
    } else {
        double lhs = spec.c * spec.c;
        double rhs = spec.a * spec.a + spec.a * spec.b + spec.b * spec.b;
        rep.law_cos_residual = std::abs(lhs - rhs) / std::max(1.0, lhs);
        if (rep.law_cos_residual > eps) rep.errors.push_back("c^2 = a^2 + ab + b^2 fails numerically");
    }

    rep.alpha_in_range = spec.alpha > eps && spec.alpha < kPi / 3.0 - eps;
    if (!rep.alpha_in_range) rep.errors.push_back("alpha must lie strictly inside (0, pi/3)");

    double sin_gamma = std::sin(2.0 * kPi / 3.0);
    if (std::sin(spec.alpha) > eps) {
        rep.law_sin_residual =
            std::abs(spec.a / std::sin(spec.alpha) - spec.c / sin_gamma) / std::max(1.0, spec.c / sin_gamma);
        if (rep.law_sin_residual > 1e3 * eps)
            rep.errors.push_back("alpha inconsistent with side lengths (law of sines)");
    }

    // Angle commensurability. With exact sides cos(alpha) is an exact rational
    // and the classification is decisive; an isosceles a = b forces
    // alpha = beta = pi/6, also decisive.
    bool isosceles = (spec.a_exact && spec.b_exact) ? (*spec.a_exact == *spec.b_exact)
                                                    : std::abs(spec.a - spec.b) <= eps * std::max(1.0, spec.c);
    if (all_exact) {
        Rat cosine = (*spec.b_exact * *spec.b_exact + *spec.c_exact * *spec.c_exact - *spec.a_exact * *spec.a_exact) /
                     (2 * *spec.b_exact * *spec.c_exact);
        rep.cos_alpha_exact = cosine;
        rep.niven = niven_exceptional(cosine) ? NivenVerdict::ProvedCommensurable : NivenVerdict::ProvedIncommensurable;
        rep.notes.push_back("cos(alpha) = " + rat_to_string(cosine) + " exactly");
    } else if (isosceles) {
        rep.niven = NivenVerdict::ProvedCommensurable;
        rep.notes.push_back("a = b forces alpha = beta = pi/6");
    } else {
        rep.niven = NivenVerdict::Inconclusive;
    }

    if (spec.angle_mode == AngleMode::Incommensurable && rep.niven == NivenVerdict::ProvedCommensurable)
        rep.errors.push_back("declared angle_mode=incommensurable but alpha is a rational multiple of pi");
    if (spec.angle_mode == AngleMode::Commensurable && rep.niven == NivenVerdict::ProvedIncommensurable)
        rep.errors.push_back("declared angle_mode=commensurable but alpha is provably not a rational multiple of pi");

    if (spec.side_mode == SideMode::Commensurable && !(spec.a_exact && spec.b_exact))
        rep.errors.push_back("side_mode=commensurable requires exact rational a and b");
    if (spec.side_mode == SideMode::Incommensurable && spec.a_exact && spec.b_exact)
        rep.errors.push_back("declared side_mode=incommensurable but a/b is rational");

    rep.ok = rep.errors.empty();
    return rep;
}

IntegerTriple eisenstein_triple(long m, long n) {
    if (m <= n || n < 1) throw std::invalid_argument("eisenstein_triple: need m > n >= 1");
    return IntegerTriple{m * m - n * n, 2 * m * n + n * n, m * m + m * n + n * n};
}

}  // namespace tritile
