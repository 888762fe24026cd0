#pragma once

#include "tritile/rat.hpp"
#include "tritile/symlen.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tritile {

enum class AngleMode : uint8_t { Incommensurable, Commensurable, Unknown };
enum class SideMode : uint8_t { Commensurable, Incommensurable, Unknown };

std::string to_string(AngleMode m);
std::string to_string(SideMode m);
AngleMode angle_mode_from_string(const std::string& s);
SideMode side_mode_from_string(const std::string& s);

// The prototile: a triangle with angles (alpha, pi/3 - alpha, 2pi/3) opposite
// sides (a, b, c). Sides may be exact rationals or plain reals; the exact
// values, when present, feed the symbolic machinery.
struct TileSpec {
    double alpha = 0.0;                 // radians, in (0, pi/3)
    double a = 0.0, b = 0.0, c = 0.0;   // numeric side lengths
    std::optional<Rat> a_exact, b_exact, c_exact;
    AngleMode angle_mode = AngleMode::Unknown;
    SideMode side_mode = SideMode::Unknown;

    double side(SideLabel s) const { return s == SideLabel::A ? a : (s == SideLabel::B ? b : c); }
    double beta() const;
    std::optional<Rat> exact_side(SideLabel s) const {
        return s == SideLabel::A ? a_exact : (s == SideLabel::B ? b_exact : c_exact);
    }
};

enum class NivenVerdict : uint8_t { ProvedIncommensurable, ProvedCommensurable, Inconclusive };

struct SpecReport {
    bool ok = false;
    std::vector<std::string> errors;
    std::vector<std::string> notes;
    double law_cos_residual = 0.0;  // |c^2 - (a^2 + ab + b^2)| / c^2
    double law_sin_residual = 0.0;  // consistency of alpha with the side data
    bool alpha_in_range = false;
    NivenVerdict niven = NivenVerdict::Inconclusive;
    std::optional<Rat> cos_alpha_exact;
};

// Build a spec from sides; alpha derived from the law of cosines unless given.
TileSpec make_spec(double a, double b, std::optional<double> alpha = std::nullopt,
                   AngleMode am = AngleMode::Unknown, SideMode sm = SideMode::Unknown);
TileSpec make_spec_exact(const Rat& a, const Rat& b, AngleMode am = AngleMode::Unknown,
                         SideMode sm = SideMode::Unknown);

// Validates the triangle data and classifies the angle via the rational-cosine
// (Niven) criterion when the sides are exact. Inconsistent declarations are
// errors: the tool never guesses a mode the data contradicts.
SpecReport check_tile_spec(const TileSpec& spec, double eps);

// c^2 = a^2 + ab + b^2 triples with all sides integral, e.g. (3,5,7).
// For these cos(alpha) is rational, so the Niven classification is decisive.
struct IntegerTriple {
    long a, b, c;
};
IntegerTriple eisenstein_triple(long m, long n);

}  // namespace tritile
