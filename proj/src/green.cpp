#include "henon/green.hpp"

#include <cmath>

namespace henon {

namespace {

constexpr double kClamp = 1e-14;
constexpr double kHuge = 1e100;  // beyond this the limit has converged

double coeff_weight(const HenonFactor& f) {
    double s = 0.0;
    for (const auto& c : f.p_coeffs) s += std::abs(c.to_complex());
    return s;
}

double max_norm(PointC2 p) { return std::max(std::abs(p.x), std::abs(p.y)); }

double log_plus(double v) { return v <= 1.0 ? 0.0 : std::log(v); }

bool in_forward_escape_region(PointC2 p, double radius) {
    double ay = std::abs(p.y);
    return ay >= std::abs(p.x) && ay >= radius;
}

bool in_backward_escape_region(PointC2 p, double radius) {
    double ax = std::abs(p.x);
    return ax >= std::abs(p.y) && ax >= radius;
}

bool finite(PointC2 p) {
    return std::isfinite(p.x.real()) && std::isfinite(p.x.imag()) &&
           std::isfinite(p.y.real()) && std::isfinite(p.y.imag());
}

EscapeVerdict orbit_verdict(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts,
                            bool forward, double radius) {
    for (int t = 0; t <= opts.max_iterations; ++t) {
        if (!finite(p)) return {true, t, false};  // overflow counts as escape
        bool out = forward ? in_forward_escape_region(p, radius)
                           : in_backward_escape_region(p, radius);
        if (out) return {true, t, false};
        if (t == opts.max_iterations) break;
        p = forward ? apply(comp, p) : apply_inverse(comp, p);
    }
    return {false, opts.max_iterations, true};
}

GreenResult green_impl(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts,
                       bool forward, double radius) {
    const double d = static_cast<double>(comp.degree());
    GreenResult out;
    out.escaped = forward ? in_forward_escape_region(p, radius)
                          : in_backward_escape_region(p, radius);
    double scale = 1.0;  // d^{-t}
    double g_prev = log_plus(max_norm(p));
    for (int t = 1; t <= opts.max_iterations; ++t) {
        p = forward ? apply(comp, p) : apply_inverse(comp, p);
        scale /= d;
        double nm = max_norm(p);
        if (!std::isfinite(nm) || nm > kHuge) {
            // Increments past this point are O(d^{-t}); the estimate stands.
            double g = std::isfinite(nm) ? scale * log_plus(nm) : g_prev;
            out.value = g < kClamp ? 0.0 : g;
            out.escaped = true;
            out.iterations = t;
            return out;
        }
        double g = scale * log_plus(nm);
        if (!out.escaped) {
            bool entered = forward ? in_forward_escape_region(p, radius)
                                   : in_backward_escape_region(p, radius);
            if (entered) out.escaped = true;
        }
        if (out.escaped && std::abs(g - g_prev) < opts.tolerance) {
            out.value = g < kClamp ? 0.0 : g;
            out.iterations = t;
            return out;
        }
        g_prev = g;
    }
    out.iterations = opts.max_iterations;
    out.iteration_limited = true;
    // Bounded verdict: no escape within the cap means the potential is 0.
    out.value = out.escaped && g_prev >= kClamp ? g_prev : 0.0;
    return out;
}

}  // namespace

double filtration_radius(const HenonComposition& comp) {
    double r = 0.0;
    for (const auto& f : comp.factors)
        r = std::max(r, 2.0 + std::abs(f.delta_cd()) + coeff_weight(f));
    return r;
}

double backward_filtration_radius(const HenonComposition& comp) {
    double r = 0.0;
    for (const auto& f : comp.factors)
        r = std::max(r, 2.0 + 2.0 * std::abs(f.delta_cd()) + coeff_weight(f));
    return r;
}

EscapeVerdict in_k_plus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts) {
    double radius = std::max(opts.escape_radius, filtration_radius(comp));
    return orbit_verdict(comp, p, opts, /*forward=*/true, radius);
}

EscapeVerdict in_k_minus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts) {
    double radius = std::max(opts.escape_radius, backward_filtration_radius(comp));
    return orbit_verdict(comp, p, opts, /*forward=*/false, radius);
}

GreenResult green_plus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts) {
    double radius = std::max(opts.escape_radius, filtration_radius(comp));
    return green_impl(comp, p, opts, /*forward=*/true, radius);
}

GreenResult green_minus(const HenonComposition& comp, PointC2 p, const EscapeOptions& opts) {
    double radius = std::max(opts.escape_radius, backward_filtration_radius(comp));
    return green_impl(comp, p, opts, /*forward=*/false, radius);
}

}  // namespace henon
