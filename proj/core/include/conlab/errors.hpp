#pragma once

#include <stdexcept>
#include <string>

namespace conlab {

// Base type for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph violates a structural invariant (self loop, bad vertex id, duplicate
// edge, non-finite conductance).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Operation needs a spanning tree but the graph is not connected.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

// Cycle-space operation invoked on a graph with corank zero.
class EmptyCycleSpace : public Error {
 public:
  using Error::Error;
};

// Intertwiner is numerically rank deficient and cannot be normalized.
class RankDeficientIntertwiner : public Error {
 public:
  using Error::Error;
};

// Matrix does not annihilate the all-ones vector.
class NotZeroRowSum : public Error {
 public:
  using Error::Error;
};

// Zero eigenvalue is not simple where a simple one is required.
class MultipleZeroEVs : public Error {
 public:
  using Error::Error;
};

// Matrix fails the normality test required by a sharp prediction.
class NotNormal : public Error {
 public:
  using Error::Error;
};

// Coupling is not convergent where a stationary regime is required.
class NotConvergent : public Error {
 public:
  using Error::Error;
};

// Schedule is not uniformly dissipative over the inspected horizon.
class PreconditionNotDissipative : public Error {
 public:
  using Error::Error;
};

// Integrator state exceeded the blow-up threshold or became non-finite.
class StepInstability : public Error {
 public:
  using Error::Error;
};

// Bad scalar argument (nonpositive step, odd degree, size out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// File or format problem while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace conlab
