#pragma once

#include <stdexcept>
#include <string>

namespace evac {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct DegenerateChord : Error { using Error::Error; };
struct NoIntersection : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };

// strategy
struct NegativeAlpha : Error { using Error::Error; };
struct BeforePerimeter : Error { using Error::Error; };
struct OddNotSupported : Error { using Error::Error; };

// chase solver
struct OutOfWindow : Error { using Error::Error; };
struct InfeasibleRho : Error { using Error::Error; };
struct NoRoot : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };

// evaluator
struct NotCovered : Error { using Error::Error; };
struct NeverCovered : Error { using Error::Error; };

// bounds
struct OutOfRange : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };

}  // namespace evac
