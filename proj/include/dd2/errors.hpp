#pragma once

#include <stdexcept>
#include <string>

namespace dd2 {

// Malformed input text (edge lists, manifests). CLI exit code 1.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated precondition
// (non-DD2 input to a solver, infeasible plan, ...). CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact enumeration would exceed the configured budget. CLI exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dd2
