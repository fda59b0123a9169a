#pragma once

#include <stdexcept>
#include <string>

namespace contagion {

enum class ErrorKind {
  parse,           // malformed text input
  invalid_graph,   // self-loop, duplicate edge, vertex id out of range
  invalid_argument,
  mismatch,        // thresholds bound to a different graph
  limit_exceeded,  // exact solver component cap
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace contagion
