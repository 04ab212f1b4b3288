#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colpart {

// Malformed user input: graph specs, edge-list files, polynomial literals.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad coordinates, size mismatch).
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An enumeration or state space would exceed its configured budget.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, std::string required)
        : std::runtime_error(what), required_(std::move(required)) {}

    // Decimal count that tripped the limit (colorings or live states).
    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

// No recurrence of admissible order annihilates the series.
class not_found_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A reconstructed object failed its own re-expansion check.
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generating function whose denominator vanishes at x = 0 after a
// substitution, so it has no power-series expansion there.
class degenerate_gf_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace colpart
