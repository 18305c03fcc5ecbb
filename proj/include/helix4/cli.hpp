#pragma once

#include <cstdint>
#include <string>

namespace helix4::cli {

/// Exit codes shared by all subcommands.
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;  // check: detectors disagree
constexpr int kExitInputError = 2;    // I/O, format or configuration errors
constexpr int kExitNumericError = 3;  // CurvatureVanishes, ProfileTooCoarse, ...

struct RunConfig {
    // grid overrides
    double s0 = 0.0;
    double h = 1e-3;
    std::size_t n = 6000;

    // tolerance overrides
    double tol_const = 1e-4;
    double tol_res = 1e-4;
    double tol_axis = 1e-5;
    double kappa_min = 0.0;  // 0 = auto (1e-8 / h)

    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string format = "both";  // csv | txt | both

    // analyze
    std::string input;    // curve CSV path
    std::string builtin;  // e.g. "wcurve:0.447,1,0.447,2"

    // reconstruct
    std::string profile_input;  // profile CSV path or builtin spec
    std::string frame0;         // 16 comma-separated numbers (row-major)
    std::string p0;             // 4 comma-separated numbers

    // synthesize: kappa family specs "const:v" or "wave:base,amp,freq[,phase]"
    std::string k2_spec = "const:1";
    std::string k3_spec = "const:1";
    double A = 1.0, B = -1.0, D = 4.0;

    // check
    std::size_t n_slant = 20;
    std::size_t n_nonslant = 20;
};

/// Validate the shared fields; returns an error message or empty string.
std::string validate(const RunConfig& cfg);

int run_analyze(const RunConfig& cfg);
int run_reconstruct(const RunConfig& cfg);
int run_synthesize(const RunConfig& cfg);
int run_check(const RunConfig& cfg);

}  // namespace helix4::cli
