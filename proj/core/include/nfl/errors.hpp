#pragma once

#include <stdexcept>
#include <string>

namespace nfl {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violations by the caller: mismatched contexts, bad arguments.
struct usage_error : error {
  using error::error;
};

// A configured cap was hit (pair count, coefficient size, minor size).
struct resource_error : error {
  using error::error;
};

struct invalid_matroid_error : error {
  using error::error;
};

// An operation was asked for outside its supported range
// (non-simple matroid, hyperplane not a basis column, too many parameters).
struct unsupported_error : error {
  using error::error;
};

// The analysis hypotheses fail: characteristic polynomial does not split.
struct non_splitting_error : error {
  using error::error;
};

struct not_representable_error : error {
  using error::error;
};

// Oracle / symbolic cross-check disagreement.
struct validation_error : error {
  using error::error;
};

}  // namespace nfl
