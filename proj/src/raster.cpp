#include "henon/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "henon/errors.hpp"

namespace henon {

namespace {

double dot4(const PointC2& a, const PointC2& b) {
    return a.x.real() * b.x.real() + a.x.imag() * b.x.imag() + a.y.real() * b.y.real() +
           a.y.imag() * b.y.imag();
}

void validate(const SliceSpec& slice) {
    if (slice.width < 1 || slice.height < 1)
        throw ValidationError("slice resolution must be at least 1x1");
    // Real linear independence via the Gram determinant.
    double uu = dot4(slice.axis_u, slice.axis_u);
    double vv = dot4(slice.axis_v, slice.axis_v);
    double uv = dot4(slice.axis_u, slice.axis_v);
    if (uu * vv - uv * uv <= 1e-12 * std::max(1.0, uu * vv))
        throw ValidationError("slice axes must be linearly independent over the reals");
}

}  // namespace

Raster render_slice(const HenonComposition& comp, const SliceSpec& slice,
                    const EscapeOptions& opts, unsigned threads) {
    validate(slice);
    Raster raster;
    raster.width = slice.width;
    raster.height = slice.height;
    raster.values.assign(static_cast<size_t>(slice.width) * slice.height, 0.0);

    const double du = (slice.u_max - slice.u_min) / slice.width;
    const double dv = (slice.v_max - slice.v_min) / slice.height;

    auto render_rows = [&](int row_begin, int row_end) {
        for (int row = row_begin; row < row_end; ++row) {
            double v = slice.v_min + dv * row;
            for (int col = 0; col < slice.width; ++col) {
                double u = slice.u_min + du * col;
                PointC2 p{slice.origin.x + u * slice.axis_u.x + v * slice.axis_v.x,
                          slice.origin.y + u * slice.axis_u.y + v * slice.axis_v.y};
                raster.values[static_cast<size_t>(row) * slice.width + col] =
                    green_plus(comp, p, opts).value;
            }
        }
    };

    unsigned want = threads == 0 ? std::thread::hardware_concurrency() : threads;
    want = std::min<unsigned>(std::max(1u, want), static_cast<unsigned>(slice.height));
    if (want <= 1) {
        render_rows(0, slice.height);
        return raster;
    }
    std::vector<std::thread> pool;
    pool.reserve(want);
    int chunk = (slice.height + static_cast<int>(want) - 1) / static_cast<int>(want);
    for (unsigned t = 0; t < want; ++t) {
        int begin = static_cast<int>(t) * chunk;
        int end = std::min(slice.height, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(render_rows, begin, end);
    }
    for (auto& th : pool) th.join();
    return raster;
}

void write_pgm(std::ostream& out, const Raster& raster) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (double v : raster.values) {
        if (v <= 0.0) continue;
        double lg = std::log(v);
        if (!any) {
            lo = hi = lg;
            any = true;
        } else {
            lo = std::min(lo, lg);
            hi = std::max(hi, lg);
        }
    }
    out << "P5\n" << raster.width << " " << raster.height << "\n255\n";
    for (double v : raster.values) {
        unsigned char pixel = 0;
        if (v > 0.0) {
            if (!any || hi == lo) {
                pixel = 255;
            } else {
                double scaled = (std::log(v) - lo) / (hi - lo);
                pixel = static_cast<unsigned char>(1 + std::lround(254.0 * scaled));
            }
        }
        out.put(static_cast<char>(pixel));
    }
}

void write_csv(std::ostream& out, const Raster& raster) {
    char buf[40];
    for (int row = 0; row < raster.height; ++row) {
        for (int col = 0; col < raster.width; ++col) {
            std::snprintf(buf, sizeof buf, "%.17g", raster.at(col, row));
            if (col) out << ",";
            out << buf;
        }
        out << "\n";
    }
}

}  // namespace henon
