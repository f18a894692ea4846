#pragma once

#include <stdexcept>
#include <string>

namespace distlat {

// Operands live in different groups.
struct ParentMismatch : std::invalid_argument {
  explicit ParentMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix does not send source relations into target relations.
struct IllDefinedHomomorphism : std::invalid_argument {
  explicit IllDefinedHomomorphism(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyFamily : std::invalid_argument {
  explicit EmptyFamily(const std::string& what) : std::invalid_argument(what) {}
};

struct ClosureCapExceeded : std::runtime_error {
  ClosureCapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap(cap) {}
  std::size_t cap;
};

struct NonFreeAmbient : std::invalid_argument {
  explicit NonFreeAmbient(const std::string& what) : std::invalid_argument(what) {}
};

struct InfiniteAmbient : std::invalid_argument {
  explicit InfiniteAmbient(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed (e.g. d o d != 0).
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace distlat
