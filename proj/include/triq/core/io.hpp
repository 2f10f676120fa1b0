#pragma once

// Plain-text instance formats. All indices in files are 1-based.
//
//   array  : "n" then one line of n integers
//   queries: one query per line, "l r" or "l1 r1 l2 r2"
//   graph  : "n m" then m lines "u v"
//   matrix : "rows cols" then one line per row

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/graph.hpp"
#include "triq/core/types.hpp"

namespace triq::io {

namespace detail {

// Yields non-blank lines as integer lists, tracking the 1-based line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<Value>& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.clear();
      std::string_view rest(line);
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = std::min(rest.find_first_of(" \t\r"), rest.size());
        Value v = 0;
        const auto tok = rest.substr(0, end);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw InputError("expected an integer, got '" + std::string(tok) + "'", line_no_);
        }
        out.push_back(v);
        rest.remove_prefix(end);
      }
      return true;
    }
    return false;
  }

  [[nodiscard]] std::size_t line() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return f;
}

}  // namespace detail

inline IntArray read_array(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<Value> header;
  if (!reader.next(header) || header.size() != 1 || header[0] < 1) {
    throw InputError("array header must be a single positive length", reader.line());
  }
  std::vector<Value> values;
  std::vector<Value> row;
  while (values.size() < static_cast<std::size_t>(header[0]) && reader.next(row)) {
    values.insert(values.end(), row.begin(), row.end());
  }
  if (values.size() != static_cast<std::size_t>(header[0])) {
    throw InputError("expected " + std::to_string(header[0]) + " values, found " +
                         std::to_string(values.size()),
                     reader.line());
  }
  if (reader.next(row)) throw InputError("trailing data after array values", reader.line());
  return IntArray::checked(std::move(values));
}

struct QueryFile {
  std::vector<Range> ranges;
  std::vector<RangePair> pairs;

  [[nodiscard]] std::size_t size() const noexcept { return ranges.size() + pairs.size(); }
};

// Reads a query file; when n > 0 every query is validated against it.
inline QueryFile read_queries(std::istream& in, Index n = 0) {
  detail::LineReader reader(in);
  QueryFile qf;
  std::vector<Value> row;
  auto idx = [&](Value v) {
    if (v < 1) throw InputError("query indices are 1-based", reader.line());
    return static_cast<Index>(v);
  };
  while (reader.next(row)) {
    try {
      if (row.size() == 2) {
        Range r{idx(row[0]), idx(row[1])};
        if (n > 0) r.validate(n);
        qf.ranges.push_back(r);
      } else if (row.size() == 4) {
        RangePair p{{idx(row[0]), idx(row[1])}, {idx(row[2]), idx(row[3])}};
        if (n > 0) p.validate(n);
        qf.pairs.push_back(p);
      } else {
        throw InputError("a query line holds 2 or 4 integers", reader.line());
      }
    } catch (const InputError& e) {
      if (e.line() != 0) throw;
      throw InputError(e.what(), reader.line());
    } catch (const Error& e) {
      throw InputError(e.what(), reader.line());
    }
    if (!qf.ranges.empty() && !qf.pairs.empty()) {
      throw InputError("query file mixes single ranges and range pairs", reader.line());
    }
  }
  return qf;
}

inline Graph read_graph(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<Value> row;
  if (!reader.next(row) || row.size() != 2 || row[0] < 0 || row[1] < 0) {
    throw InputError("graph header must be 'n m'", reader.line());
  }
  const auto n = static_cast<Index>(row[0]);
  const auto m = static_cast<Index>(row[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m && reader.next(row)) {
    if (row.size() != 2) throw InputError("edge line must be 'u v'", reader.line());
    if (row[0] < 1 || row[1] < 1 || row[0] > static_cast<Value>(n) || row[1] > static_cast<Value>(n)) {
      throw InputError("edge endpoint outside [1," + std::to_string(n) + "]", reader.line());
    }
    edges.push_back({static_cast<Vertex>(row[0] - 1), static_cast<Vertex>(row[1] - 1)});
  }
  if (edges.size() != m) {
    throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     reader.line());
  }
  if (reader.next(row)) throw InputError("trailing data after edge list", reader.line());
  try {
    return Graph(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid graph: ") + e.what());
  }
}

inline DenseMatrix read_matrix(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<Value> row;
  if (!reader.next(row) || row.size() != 2 || row[0] < 0 || row[1] < 0) {
    throw InputError("matrix header must be 'rows cols'", reader.line());
  }
  const auto rows = static_cast<Index>(row[0]);
  const auto cols = static_cast<Index>(row[1]);
  std::vector<Value> entries;
  entries.reserve(rows * cols);
  for (Index r = 0; r < rows; ++r) {
    if (!reader.next(row)) throw InputError("missing matrix row " + std::to_string(r + 1), reader.line());
    if (row.size() != cols) {
      throw InputError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols),
                       reader.line());
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (reader.next(row)) throw InputError("trailing data after matrix rows", reader.line());
  return {rows, cols, std::move(entries)};
}

inline IntArray read_array(const std::string& path) {
  auto f = detail::open(path);
  return read_array(f);
}
inline QueryFile read_queries(const std::string& path, Index n = 0) {
  auto f = detail::open(path);
  return read_queries(f, n);
}
inline Graph read_graph(const std::string& path) {
  auto f = detail::open(path);
  return read_graph(f);
}
inline DenseMatrix read_matrix(const std::string& path) {
  auto f = detail::open(path);
  return read_matrix(f);
}

inline void write_array(std::ostream& out, std::span<const Value> values) {
  out << values.size() << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
}

inline void write_queries(std::ostream& out, std::span<const Range> ranges) {
  for (const Range& r : ranges) out << r.l << ' ' << r.r << '\n';
}

inline void write_queries(std::ostream& out, std::span<const RangePair> pairs) {
  for (const RangePair& p : pairs) {
    out << p.first.l << ' ' << p.first.r << ' ' << p.second.l << ' ' << p.second.r << '\n';
  }
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

inline void write_triangles(std::ostream& out, std::span<const Triangle> ts) {
  for (const Triangle& t : ts) out << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
}

}  // namespace triq::io
