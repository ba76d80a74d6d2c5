#pragma once

#include <stdexcept>
#include <string>

namespace sfem {

/// Linear solver broke down or failed to reach the requested residual.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A geometric query found no match, or more than one.
class LookupError : public std::runtime_error {
public:
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

/// Element-level assembly failure (degenerate triangle).
class AssemblyError : public std::runtime_error {
public:
  explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sfem
