#include "henon/sampling.hpp"

namespace henon {

Rational sample_rational(std::mt19937_64& rng, int span) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

GaussianRational sample_coefficient(std::mt19937_64& rng, int span, bool gaussian) {
    Rational re = sample_rational(rng, span);
    if (!gaussian) return GaussianRational(re);
    // Keep imaginary parts sparse so real compositions stay common.
    std::uniform_int_distribution<int> coin(0, 2);
    Rational im = coin(rng) == 0 ? sample_rational(rng, span) : Rational(0);
    return {re, im};
}

GaussianRational sample_delta(std::mt19937_64& rng, bool unit_disk, bool gaussian) {
    if (!unit_disk) {
        while (true) {
            GaussianRational d = sample_coefficient(rng, 2, gaussian);
            if (!d.is_zero()) return d;
        }
    }
    // num/den with |num|^2 < den^2 gives |delta| < 1 exactly.
    std::uniform_int_distribution<int> den(2, 5);
    while (true) {
        int b = den(rng);
        std::uniform_int_distribution<int> num(-b + 1, b - 1);
        int a = num(rng);
        int c = gaussian ? num(rng) : 0;
        if (a == 0 && c == 0) continue;
        if (a * a + c * c >= b * b) continue;
        return {Rational(a, b), Rational(c, b)};
    }
}

HenonComposition sample_composition(std::mt19937_64& rng, const SampleOptions& opts) {
    std::uniform_int_distribution<size_t> pick(0, opts.degree_menu.size() - 1);
    std::vector<HenonFactor> factors;
    factors.reserve(opts.n);
    for (size_t j = 0; j < opts.n; ++j) {
        int degree = opts.degree_menu[pick(rng)];
        std::vector<GaussianRational> coeffs(degree);
        for (int k = 0; k < degree; ++k) {
            if (opts.normal_form && k == degree - 1) continue;  // stays zero
            coeffs[k] = sample_coefficient(rng, opts.coeff_span, opts.gaussian);
        }
        factors.emplace_back(degree, std::move(coeffs),
                             sample_delta(rng, opts.delta_in_unit_disk, opts.gaussian));
    }
    return HenonComposition(std::move(factors));
}

}  // namespace henon
