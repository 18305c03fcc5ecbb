#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "helix4/profile.hpp"
#include "helix4/synthesis.hpp"

namespace helix4 {

/// Small deterministic RNG wrapper: identical sequences on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    double uniform(double lo, double hi);
    std::uint64_t next();

private:
    std::uint64_t state_;
};

enum class ProfileKind { Slant, NonSlant };

struct BatteryItem {
    std::string name;
    ProfileKind expected;
    CurvatureProfile profile;
    std::optional<SynthesisRecord> synth;  // present for synthesized items
};

/// Deterministic test battery: `n_slant` synthesized slant profiles (random
/// smooth positive kappa2/kappa3 families, random A, B, D, rejection-sampled
/// until the synthesis is valid with kappa1 bounded away from zero) and
/// `n_nonslant` profiles cycling through constant, W-curve and
/// kappa1-perturbed-slant families (perturbation amplitude 0.2).
std::vector<BatteryItem> build_battery(std::size_t n_slant, std::size_t n_nonslant,
                                       std::uint64_t seed, Grid grid);

/// Smooth positive curvature family used for synthesis inputs:
/// b * (1 + a1 sin(w1 s + p1) + a2 cos(w2 s + p2)) with |a1|+|a2| <= 0.22.
SampledFunction smooth_positive_family(Rng& rng, Grid grid);

}  // namespace helix4
