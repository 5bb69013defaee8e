#pragma once

#include <stdexcept>
#include <string>

namespace thermowitness {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical or physical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Species name not present in the built-in registry.
class UnknownSpecies : public Error {
public:
    explicit UnknownSpecies(const std::string& name)
        : Error("unknown particle species: '" + name + "'") {}
};

/// zeta(s) requested at s <= 1 where the series diverges.
class DivergentZeta : public DomainError {
public:
    explicit DivergentZeta(double s)
        : DomainError("zeta(s) diverges for s <= 1 (got s = " + std::to_string(s) + ")") {}
};

/// BEC critical temperature requested in d <= 2 where it vanishes.
class NoFiniteCondensation : public DomainError {
public:
    explicit NoFiniteCondensation(int d)
        : DomainError("no finite-temperature condensation in d = " + std::to_string(d)) {}
};

/// Normal-phase solve requested below the condensation temperature.
class PhaseError : public Error {
public:
    explicit PhaseError(const std::string& msg) : Error(msg) {}
};

/// Discrete mode set does not cover the thermally occupied spectrum.
class CutoffTooSmall : public Error {
public:
    explicit CutoffTooSmall(const std::string& msg) : Error(msg) {}
};

/// Per-subset grid too coarse for a meaningful restricted eigenproblem.
class TooCoarse : public Error {
public:
    explicit TooCoarse(const std::string& msg) : Error(msg) {}
};

/// Eigenpair residual target not reached.
class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

/// Energy-balance equation has no root inside the search bracket.
class NoCrossing : public Error {
public:
    explicit NoCrossing(const std::string& msg) : Error(msg) {}
};

/// Scenario file malformed or violating an invariant.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace thermowitness
