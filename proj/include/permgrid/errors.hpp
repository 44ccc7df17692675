#pragma once

#include <stdexcept>
#include <string>

namespace permgrid {

/// Thrown when an operation would exceed its configured enumeration budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a refined-letter multiplicity invariant fails on a language
/// member; indicates a language-definition bug, not bad user input.
struct classification_error : std::runtime_error {
    explicit classification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permgrid
