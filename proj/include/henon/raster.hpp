#pragma once

#include <iosfwd>
#include <vector>

#include "henon/green.hpp"

namespace henon {

// Real 2-D slice through C^2: point(u, v) = origin + u*axis_u + v*axis_v
// with real parameters u, v. Pixels sample the left/top edge of each cell
// (pitch = extent / resolution), so doubling the resolution keeps every
// shared sample point identical.
struct SliceSpec {
    PointC2 origin{{0.0, 0.0}, {0.0, 0.0}};
    PointC2 axis_u{{1.0, 0.0}, {0.0, 0.0}};
    PointC2 axis_v{{0.0, 0.0}, {1.0, 0.0}};
    double u_min = -2.0, u_max = 2.0;
    double v_min = -2.0, v_max = 2.0;
    int width = 256, height = 256;
};

struct Raster {
    int width = 0, height = 0;
    std::vector<double> values;  // row-major, rows indexed by v

    double at(int col, int row) const { return values[static_cast<size_t>(row) * width + col]; }
};

// Per-pixel G+ over the slice. Rows are rendered in parallel (threads = 0
// picks the hardware count); the output does not depend on scheduling.
Raster render_slice(const HenonComposition& comp, const SliceSpec& slice,
                    const EscapeOptions& opts = {}, unsigned threads = 0);

// Binary 8-bit portable graymap: 0 (black) for G+ = 0, log-scaled gray for
// positive values.
void write_pgm(std::ostream& out, const Raster& raster);

// Row-major CSV of the raw values, full double precision.
void write_csv(std::ostream& out, const Raster& raster);

}  // namespace henon
