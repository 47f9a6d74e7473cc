#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "stcut/problem.hpp"

namespace stcut {

// Graph file format (whitespace separated, 1-based indices):
//   line 1: n m s t     node count, edge count, terminal indices
//   m lines: i j w      endpoints (i != j) and weight w >= 0
// Pairs not listed have weight 0; listing a pair twice is an error.

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, SelfLoop, DuplicateEdge, OutOfRangeIndex };

  ParseError(Kind kind, int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Parses a graph file body. The format does not carry alpha; the caller
/// supplies it (CLI flag or default).
Problem read_problem(std::string_view text, double alpha = kDefaultAlpha);

/// Renders a Problem in the graph file format; only nonzero weights are
/// listed, in (i, j) order. read_problem(write_problem(p)) == p for valid p.
std::string write_problem(const Problem& problem);

/// File variants. Reading a missing/unreadable path throws
/// std::runtime_error whose message names the path.
Problem read_problem_file(const std::string& path,
                          double alpha = kDefaultAlpha);
void write_problem_file(const Problem& problem, const std::string& path);

}  // namespace stcut
