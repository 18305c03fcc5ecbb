#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace helix4 {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class TooFewSamples : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class StencilUnavailable : public Error {
public:
    using Error::Error;
};

/// Thrown by gram_schmidt4 when the residual of step `step` (0-based) falls
/// below the rank tolerance. For Frenet frames this signals kappa_{step} ~ 0.
class RankDeficient : public Error {
public:
    RankDeficient(int step, const std::string& what) : Error(what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

/// A curvature dropped below the kappa_min threshold. `which` is 1, 2 or 3;
/// `sample` is the offending grid index.
class CurvatureVanishes : public Error {
public:
    CurvatureVanishes(int which, std::size_t sample, const std::string& what)
        : Error(what), which_(which), sample_(sample) {}
    int which() const { return which_; }
    std::size_t sample() const { return sample_; }

private:
    int which_;
    std::size_t sample_;
};

class NotUnitSpeed : public Error {
public:
    using Error::Error;
};

class BadInitialFrame : public Error {
public:
    using Error::Error;
};

class ProfileTooCoarse : public Error {
public:
    using Error::Error;
};

/// The square root in the curvature synthesis would take a negative argument.
/// `suggested_d` is a value of D large enough to clear the floor.
class SquareRootDomain : public Error {
public:
    SquareRootDomain(double suggested_d, const std::string& what)
        : Error(what), suggested_d_(suggested_d) {}
    double suggested_d() const { return suggested_d_; }

private:
    double suggested_d_;
};

class UnknownFamily : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidBracket : public Error {
public:
    using Error::Error;
};

/// Malformed input file (CSV parse failure, bad header, non-monotone s, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace helix4
