#pragma once

#include <stdexcept>
#include <string>

namespace dyncycle {

// Base of every error raised by the library. Each subclass corresponds to one
// failure mode of the public operations.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
  public:
    using Error::Error;
};

class NotPresent : public Error {
  public:
    using Error::Error;
};

class AlreadyPresent : public Error {
  public:
    using Error::Error;
};

// An edge batch that is not centered at the claimed vertex.
class InvalidBatch : public Error {
  public:
    using Error::Error;
};

class InvalidThreshold : public Error {
  public:
    using Error::Error;
};

class InvalidConfig : public Error {
  public:
    using Error::Error;
};

// Dijkstra met a negative reduced cost: the price function is not feasible.
class InfeasiblePrices : public Error {
  public:
    using Error::Error;
};

// Non-negative routine called on a graph with a negative edge; the caller
// should switch to the price-function variant.
class NegativeEdge : public Error {
  public:
    using Error::Error;
};

class NegativeCyclePresent : public Error {
  public:
    using Error::Error;
};

class NothingToRevert : public Error {
  public:
    using Error::Error;
};

} // namespace dyncycle
