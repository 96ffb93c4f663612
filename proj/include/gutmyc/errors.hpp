#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gutmyc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex pair or vertex count that violates the simple-graph invariants.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 or edge-list text. line() is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Thrown by every distance-based operation on a disconnected graph; carries
// one pair of vertices that has no path between them.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph(std::uint32_t from, std::uint32_t to)
      : Error("graph is disconnected: no path between " + std::to_string(from) + " and " +
              std::to_string(to)),
        from_(from),
        to_(to) {}
  std::uint32_t from() const noexcept { return from_; }
  std::uint32_t to() const noexcept { return to_; }

 private:
  std::uint32_t from_;
  std::uint32_t to_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gutmyc
