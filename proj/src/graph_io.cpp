#include "stcut/graph_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace stcut {

namespace {

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Pulls the next non-blank line; returns false at end of input.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  bool next(std::string& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (!is_blank(line)) {
        out.assign(line);
        return true;
      }
    }
    ++line_no;
    return false;
  }
};

long long parse_int(std::istringstream& iss, int line, const char* what) {
  long long v;
  if (!(iss >> v))
    throw ParseError(ParseError::Kind::Syntax, line,
                     std::string("expected integer ") + what);
  return v;
}

void expect_end(std::istringstream& iss, int line) {
  std::string extra;
  if (iss >> extra)
    throw ParseError(ParseError::Kind::Syntax, line,
                     "unexpected trailing token '" + extra + "'");
}

}  // namespace

Problem read_problem(std::string_view text, double alpha) {
  LineReader reader{text};
  std::string line;

  if (!reader.next(line))
    throw ParseError(ParseError::Kind::Syntax, 1, "missing header 'n m s t'");
  std::istringstream header(line);
  const long long n = parse_int(header, reader.line_no, "node count");
  const long long m = parse_int(header, reader.line_no, "edge count");
  const long long s1 = parse_int(header, reader.line_no, "terminal s");
  const long long t1 = parse_int(header, reader.line_no, "terminal t");
  expect_end(header, reader.line_no);
  if (n < 2)
    throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                     "node count must be >= 2");
  if (m < 0)
    throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                     "edge count must be >= 0");
  if (s1 < 1 || s1 > n)
    throw ParseError(ParseError::Kind::OutOfRangeIndex, reader.line_no,
                     "terminal s out of range [1, n]");
  if (t1 < 1 || t1 > n)
    throw ParseError(ParseError::Kind::OutOfRangeIndex, reader.line_no,
                     "terminal t out of range [1, n]");

  Problem pb;
  pb.n = static_cast<int>(n);
  pb.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
  pb.s = static_cast<int>(s1 - 1);
  pb.t = static_cast<int>(t1 - 1);
  pb.alpha = alpha;

  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  for (long long e = 0; e < m; ++e) {
    if (!reader.next(line))
      throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                       "expected " + std::to_string(m) + " edges, got " +
                           std::to_string(e));
    std::istringstream edge(line);
    const long long i1 = parse_int(edge, reader.line_no, "endpoint i");
    const long long j1 = parse_int(edge, reader.line_no, "endpoint j");
    double w;
    if (!(edge >> w))
      throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                       "expected real weight");
    expect_end(edge, reader.line_no);
    if (i1 < 1 || i1 > n || j1 < 1 || j1 > n)
      throw ParseError(ParseError::Kind::OutOfRangeIndex, reader.line_no,
                       "edge endpoint out of range [1, n]");
    if (i1 == j1)
      throw ParseError(ParseError::Kind::SelfLoop, reader.line_no,
                       "self-loops are not allowed");
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                       "weight must be a finite nonnegative real");
    const int i = static_cast<int>(i1 - 1), j = static_cast<int>(j1 - 1);
    const std::size_t key =
        static_cast<std::size_t>(std::min(i, j)) * n + std::max(i, j);
    if (seen[key])
      throw ParseError(ParseError::Kind::DuplicateEdge, reader.line_no,
                       "edge (" + std::to_string(i1) + ", " +
                           std::to_string(j1) + ") listed twice");
    seen[key] = true;
    pb.weight(i, j) = w;
    pb.weight(j, i) = w;
  }
  if (reader.next(line))
    throw ParseError(ParseError::Kind::Syntax, reader.line_no,
                     "unexpected content after last edge");
  return pb;
}

std::string write_problem(const Problem& pb) {
  long long m = 0;
  for (int i = 0; i < pb.n; ++i)
    for (int j = i + 1; j < pb.n; ++j)
      if (pb.weight(i, j) != 0.0) ++m;

  std::ostringstream os;
  os << pb.n << ' ' << m << ' ' << pb.s + 1 << ' ' << pb.t + 1 << '\n';
  char buf[64];
  for (int i = 0; i < pb.n; ++i) {
    for (int j = i + 1; j < pb.n; ++j) {
      const double w = pb.weight(i, j);
      if (w == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.17g", w);
      os << i + 1 << ' ' << j + 1 << ' ' << buf << '\n';
    }
  }
  return os.str();
}

Problem read_problem_file(const std::string& path, double alpha) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_problem(buf.str(), alpha);
}

void write_problem_file(const Problem& pb, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << write_problem(pb);
}

}  // namespace stcut
