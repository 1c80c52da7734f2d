#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatgasket {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutsideHull : public Error {
public:
    explicit OutsideHull(const std::string& what) : Error("point outside hull: " + what) {}
};

class WrongRegime : public Error {
public:
    explicit WrongRegime(const std::string& what) : Error("wrong regime: " + what) {}
};

class InvalidBeta : public Error {
public:
    explicit InvalidBeta(const std::string& what) : Error("invalid beta: " + what) {}
};

enum class Tape { Omega, Upsilon };

class TapeExhausted : public Error {
public:
    TapeExhausted(Tape which, std::size_t step)
        : Error(std::string(which == Tape::Omega ? "omega" : "upsilon") +
                " tape exhausted at step " + std::to_string(step)),
          which_(which), step_(step) {}

    Tape which() const noexcept { return which_; }
    std::size_t step() const noexcept { return step_; }

private:
    Tape which_;
    std::size_t step_;
};

class InadmissibleDigit : public Error {
public:
    explicit InadmissibleDigit(std::size_t step)
        : Error("inadmissible digit at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class PointInHole : public Error {
public:
    explicit PointInHole(const std::string& what) : Error("point lies in a hole: " + what) {}
};

class NoSignChange : public Error {
public:
    NoSignChange() : Error("polynomial has no sign change on the bracket") {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(std::size_t iterations)
        : Error("no convergence after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

class BadConfig : public Error {
public:
    explicit BadConfig(const std::string& what) : Error("bad configuration: " + what) {}
};

}  // namespace fatgasket
