#pragma once

#include <stdexcept>
#include <string>

namespace emcert {

// Bad input data: shape mismatches, invariant violations, malformed files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario parameters outside the supported range (D=2, K=2, N<=6, ...).
class UnsupportedScenarioError : public std::runtime_error {
public:
    explicit UnsupportedScenarioError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace emcert
