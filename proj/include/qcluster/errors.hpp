#pragma once

#include <stdexcept>
#include <string>

namespace qcluster {

// Three families, mapped to CLI exit codes 2 / 1 / 3.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class MathError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when an exact division that the theory guarantees turns out inexact.
class ConsistencyError : public MathError {
  public:
    using MathError::MathError;
};

class UnsupportedSeedError : public MathError {
  public:
    using MathError::MathError;
};

}  // namespace qcluster
