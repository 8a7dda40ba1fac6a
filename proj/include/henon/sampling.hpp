#pragma once

#include <random>
#include <vector>

#include "henon/henon_map.hpp"

namespace henon {

// Knobs for drawing random test compositions with small exact coefficients.
struct SampleOptions {
    size_t n = 3;
    std::vector<int> degree_menu = {2};  // factor degrees drawn uniformly
    bool gaussian = true;                // allow imaginary parts
    bool normal_form = true;             // force the y^{d-1} coefficient to 0
    bool delta_in_unit_disk = true;      // every |delta_j| < 1
    int coeff_span = 2;                  // numerators drawn from [-span, span]
};

// Rational with numerator in [-span, span] and denominator in {1, 2, 3}.
Rational sample_rational(std::mt19937_64& rng, int span);

GaussianRational sample_coefficient(std::mt19937_64& rng, int span, bool gaussian);

// Nonzero delta; when unit_disk is set, |delta| < 1 holds exactly.
GaussianRational sample_delta(std::mt19937_64& rng, bool unit_disk, bool gaussian);

HenonComposition sample_composition(std::mt19937_64& rng, const SampleOptions& opts = {});

}  // namespace henon
