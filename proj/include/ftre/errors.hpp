#pragma once

#include <stdexcept>
#include <string>

namespace ftre {

/// Malformed input text (gate lists, manifests, calibration files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// The scheduler could not place a gate (layout too congested or starved).
struct compile_error : std::runtime_error {
    explicit compile_error(const std::string& what) : std::runtime_error(what) {}
};

/// No calibrated distance pair satisfies the error budget.
struct infeasible_error : std::runtime_error {
    infeasible_error(const std::string& what, double best_eps)
        : std::runtime_error(what), best_achievable(best_eps) {}
    double best_achievable;
};

}  // namespace ftre
