#pragma once

#include <stdexcept>
#include <string>

namespace nilcoh {

/// Malformed or out-of-contract input (bad index, wrong degree, size mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed to hold, e.g. d∘d != 0.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unknown catalog name.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A theorem was asked to answer outside its hypotheses.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The brute-force oracle refuses inputs above its size cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilcoh
