#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace biregular {

// All derived quantities are exact: arbitrary-precision integers and
// rationals. A non-integral intermediate value is a feasibility signal,
// never rounding noise.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integral(r)) throw std::logic_error("to_int on non-integral rational " + r.str());
    return numerator(r);
}

// Signals that an intersection-array pair cannot belong to any graph:
// some count came out negative, fractional, or zero where a positive
// value is forced.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(std::string check, int index, const std::string& detail)
        : std::runtime_error(check + " fails at index " + std::to_string(index) + ": " + detail),
          check_(std::move(check)),
          index_(index) {}

    const std::string& check() const { return check_; }
    int index() const { return index_; }

private:
    std::string check_;
    int index_;
};

class NotConnectedError : public std::runtime_error {
public:
    NotConnectedError() : std::runtime_error("graph is not connected") {}
};

class NotBipartiteError : public std::runtime_error {
public:
    explicit NotBipartiteError(int witness)
        : std::runtime_error("graph is not bipartite (odd cycle through vertex " +
                             std::to_string(witness) + ")"),
          witness_(witness) {}
    int witness() const { return witness_; }

private:
    int witness_;
};

// Raised when a direct count and a theorem-backed criterion disagree on
// the same graph. This always indicates a bug, never a property of the
// input.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biregular
