#pragma once

#include <stdexcept>
#include <string>

namespace fcmt {

/// Base class for every structured failure in the library.
class FcError : public std::runtime_error {
 public:
  explicit FcError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A compose_cells precondition failed. `index` is the child slot (or
/// boundary slot) at which the mismatch was detected, -1 for arity-level
/// mismatches.
class BoundaryMismatch : public FcError {
 public:
  BoundaryMismatch(int index, const std::string& msg)
      : FcError("boundary mismatch at index " + std::to_string(index) + ": " + msg),
        index(index) {}
  int index;
};

/// A cell id handed to an oracle is not owned by it.
class UnknownCell : public FcError {
 public:
  explicit UnknownCell(const std::string& msg) : FcError("unknown cell: " + msg) {}
};

/// An enumeration blew past max_cells_per_frame. Carries the offending frame.
class BudgetExceeded : public FcError {
 public:
  BudgetExceeded(const std::string& frame, std::uint64_t budget)
      : FcError("cell budget " + std::to_string(budget) + " exceeded at frame " + frame),
        frame(frame) {}
  std::string frame;
};

class MalformedUniverse : public FcError {
 public:
  explicit MalformedUniverse(const std::string& where)
      : FcError("malformed span universe: " + where) {}
};

class MalformedPresentation : public FcError {
 public:
  explicit MalformedPresentation(const std::string& where)
      : FcError("malformed presentation: " + where) {}
};

class MalformedPath : public FcError {
 public:
  explicit MalformedPath(const std::string& msg) : FcError("malformed path: " + msg) {}
};

class MalformedData : public FcError {
 public:
  explicit MalformedData(const std::string& msg) : FcError("malformed data: " + msg) {}
};

class ArityBoundExceeded : public FcError {
 public:
  ArityBoundExceeded(std::size_t requested, std::size_t bound)
      : FcError("arity " + std::to_string(requested) + " exceeds tabulated bound " +
                std::to_string(bound)) {}
};

/// A span leg required to be injective is not. Names the span and leg.
class NotMonic : public FcError {
 public:
  NotMonic(const std::string& span, const std::string& leg)
      : FcError("span '" + span + "' has a non-injective " + leg + " leg"),
        span(span),
        leg(leg) {}
  std::string span;
  std::string leg;
};

/// The frames of a monad / bimodule / enriched-category datum do not have the
/// required shape.
class FrameError : public FcError {
 public:
  explicit FrameError(const std::string& msg) : FcError("frame error: " + msg) {}
};

class NotASubset : public FcError {
 public:
  explicit NotASubset(const std::string& msg) : FcError("not a subset: " + msg) {}
};

/// A composite of equivariant cells failed equivariance. This signals an
/// implementation bug, never an expected condition.
class ClosureViolation : public FcError {
 public:
  explicit ClosureViolation(const std::string& msg) : FcError("closure violation: " + msg) {}
};

/// A construction's input failed its own law check.
class SourceInvalid : public FcError {
 public:
  explicit SourceInvalid(const std::string& msg) : FcError("source invalid: " + msg) {}
};

class NotACategory : public FcError {
 public:
  explicit NotACategory(const std::string& msg) : FcError("not a category: " + msg) {}
};

class NotAMonad : public FcError {
 public:
  explicit NotAMonad(const std::string& msg) : FcError("not a monad: " + msg) {}
};

class NotAFunctor : public FcError {
 public:
  explicit NotAFunctor(const std::string& msg) : FcError("not a functor: " + msg) {}
};

class NotAProfunctor : public FcError {
 public:
  explicit NotAProfunctor(const std::string& msg) : FcError("not a profunctor: " + msg) {}
};

class UnknownDemo : public FcError {
 public:
  explicit UnknownDemo(const std::string& name) : FcError("unknown demo: " + name) {}
};

/// Two distinct cell payloads hashed to the same 64-bit id. Practically
/// unreachable at the sizes this library targets, but detected rather than
/// silently merged.
class InternCollision : public FcError {
 public:
  explicit InternCollision(const std::string& msg) : FcError("intern collision: " + msg) {}
};

}  // namespace fcmt
