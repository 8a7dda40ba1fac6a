#pragma once

#include "henon/henon_map.hpp"

namespace henon {

struct EscapeOptions {
    int max_iterations = 200;
    double tolerance = 1e-10;   // convergence of the Green increments
    double escape_radius = 0.0;  // 0 = use the filtration radius
};

// Filtration radius R = max_j (2 + |delta_j| + sum_k |c_{j,k}|): once
// |y| >= max(|x|, R), every factor at least doubles |y|, so the region
// {|y| >= max(|x|, R)} is forward invariant and escaping.
double filtration_radius(const HenonComposition& comp);

// Radius for the inverse map; the escaping region is {|x| >= max(|y|, R-)}.
double backward_filtration_radius(const HenonComposition& comp);

struct EscapeVerdict {
    bool escaped = false;
    int iteration = 0;          // escape time, when escaped
    bool iteration_limited = false;  // bounded verdict reached the cap
};

// Forward orbit membership test for K+. "Bounded" means the orbit stayed
// outside the escape region for max_iterations steps (flagged as
// iteration-limited); entering the region proves escape.
EscapeVerdict in_k_plus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts = {});

// Backward orbit membership test for K-.
EscapeVerdict in_k_minus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts = {});

struct GreenResult {
    double value = 0.0;
    bool escaped = false;
    int iterations = 0;
    bool iteration_limited = false;
};

// Escape-rate potential G+ = lim d^{-t} log+ ||f^t(q)||_inf. Orbits that
// never enter the escape region within max_iterations yield 0 (bounded
// verdict); escaping orbits iterate until the increments drop below the
// tolerance. Values below 1e-14 clamp to 0. Satisfies G+ o f = d * G+.
GreenResult green_plus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts = {});

// Same limit under backward iteration; G- o f = d^{-1} * G-.
GreenResult green_minus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts = {});

}  // namespace henon
