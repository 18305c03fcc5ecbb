#pragma once

#include <string>
#include <vector>

#include "helix4/curve.hpp"
#include "helix4/profile.hpp"
#include "helix4/vec4.hpp"

namespace helix4 {

/// Raw rows of a curve CSV: arbitrary monotone s accepted on input.
struct RawCurve {
    std::vector<double> s;
    std::vector<Vec4> points;
};

/// Reader for the `s,x,y,z,w` format. Throws FormatError on malformed
/// input or non-monotone s.
RawCurve read_curve_csv(const std::string& path);

/// Writer always emits a uniform grid, one row per sample, with
/// round-trip decimal formatting. Atomic (write-temp-then-rename).
void write_curve_csv(const std::string& path, const CurveSample& curve);

/// Profile CSV `s,k1,k2,k3`; same conventions.
CurvatureProfile read_profile_csv(const std::string& path);
void write_profile_csv(const std::string& path, const CurvatureProfile& profile);

/// True when the sampled s column is a uniform grid within 1e-9 * h.
bool is_uniform(const std::vector<double>& s);

/// Format a double so it round-trips through decimal text.
std::string format_double(double v);

/// Write `contents` to `path` atomically.
void atomic_write(const std::string& path, const std::string& contents);

}  // namespace helix4
