#include "asmpoly/text_format.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

namespace asmpoly {
namespace {

class LineReader {
public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next line without its terminator; false at end of input.
  bool next(std::string_view &line) {
    if (pos_ >= text_.size())
      return false;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos)
      end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    pos_ = end + 1;
    ++number_;
    return true;
  }
  bool next_nonblank(std::string_view &line) {
    while (next(line))
      if (!blank(line))
        return true;
    return false;
  }
  [[nodiscard]] std::size_t line_number() const { return number_; }
  [[nodiscard]] bool rest_blank() {
    std::string_view line;
    while (next(line))
      if (!blank(line))
        return false;
    return true;
  }
  static bool blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    k = line.find_first_not_of(" \t", k);
    if (k == std::string_view::npos)
      break;
    auto end = line.find_first_of(" \t", k);
    if (end == std::string_view::npos)
      end = line.size();
    out.push_back(line.substr(k, end - k));
    k = end;
  }
  return out;
}

[[noreturn]] void fail(const LineReader &in, const std::string &what) {
  throw ParseError("line " + std::to_string(in.line_number()) + ": " + what);
}

std::size_t parse_order(const LineReader &in, std::string_view line) {
  auto t = tokens(line);
  if (t.size() != 1)
    fail(in, "expected the matrix order");
  const auto r = parse_rational(t[0]);
  if (r.get_den() != 1 || r < 1 || r > 1000)
    fail(in, "order must be a positive integer");
  return r.get_num().get_ui();
}

// Reads one matrix whose order line has already been consumed.
RationalMatrix read_body(LineReader &in, std::size_t n) {
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view line;
    if (!in.next(line))
      fail(in, "expected " + std::to_string(n) + " matrix rows");
    auto t = tokens(line);
    if (t.size() != n)
      fail(in, "expected " + std::to_string(n) + " entries, got " +
                   std::to_string(t.size()));
    for (auto tok : t) {
      try {
        entries.push_back(parse_rational(tok));
      } catch (const ParseError &e) {
        fail(in, e.what());
      }
    }
  }
  return RationalMatrix(n, std::move(entries));
}

std::string vertex_text(const GridVertex &v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string edge_text(const GridEdge &e) {
  return vertex_text(e.tail) + "->" + vertex_text(e.head);
}

GridVertex parse_vertex(std::string_view s, bool &ok) {
  ok = false;
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    return {};
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos)
    return {};
  auto num = [&](std::string_view t, int &out) {
    if (t.empty() || t.size() > 6)
      return false;
    out = 0;
    for (char ch : t) {
      if (ch < '0' || ch > '9')
        return false;
      out = out * 10 + (ch - '0');
    }
    return true;
  };
  GridVertex v;
  ok = num(s.substr(0, comma), v.row) && num(s.substr(comma + 1), v.col);
  return v;
}

} // namespace

std::string format_matrix(const RationalMatrix &m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (std::size_t i = 1; i <= m.order(); ++i) {
    for (std::size_t j = 1; j <= m.order(); ++j) {
      if (j > 1)
        out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const AsmMatrix &a) { return format_matrix(a.to_rational()); }

RationalMatrix parse_matrix(std::string_view text) {
  LineReader in(text);
  std::string_view line;
  if (!in.next(line))
    throw ParseError("empty matrix input");
  auto m = read_body(in, parse_order(in, line));
  if (!in.rest_blank())
    fail(in, "unexpected text after the matrix");
  return m;
}

std::vector<RationalMatrix> parse_matrices(std::string_view text) {
  LineReader in(text);
  std::vector<RationalMatrix> out;
  std::string_view line;
  while (in.next_nonblank(line))
    out.push_back(read_body(in, parse_order(in, line)));
  if (out.empty())
    throw ParseError("no matrices in input");
  return out;
}

std::string format_grid(const FlowGrid &g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto &e : g.edges())
    out += edge_text(e) + "\n";
  return out;
}

FlowGrid parse_grid(std::string_view text) {
  LineReader in(text);
  std::string_view line;
  if (!in.next(line))
    throw ParseError("empty grid input");
  FlowGrid g(parse_order(in, line));
  while (in.next(line)) {
    if (LineReader::blank(line))
      continue;
    auto t = tokens(line);
    if (t.size() != 1)
      fail(in, "expected one edge per line");
    auto arrow = t[0].find("->");
    if (arrow == std::string_view::npos)
      fail(in, "expected (i,j)->(k,l)");
    bool ok_tail = false, ok_head = false;
    GridEdge e{parse_vertex(t[0].substr(0, arrow), ok_tail),
               parse_vertex(t[0].substr(arrow + 2), ok_head)};
    if (!ok_tail || !ok_head)
      fail(in, "malformed edge '" + std::string(t[0]) + "'");
    try {
      if (g.contains(e))
        fail(in, "duplicate edge " + edge_text(e));
      g.insert(e);
    } catch (const InvalidFlowGrid &err) {
      fail(in, err.what());
    }
  }
  return g;
}

std::uint64_t grid_hash(const FlowGrid &g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : format_grid(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_vector(const RationalVector &v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0)
      out += ' ';
    out += to_string(v[k]);
  }
  return out + "\n";
}

RationalVector parse_vector(std::string_view text) {
  LineReader in(text);
  std::string_view line;
  if (!in.next_nonblank(line))
    throw ParseError("empty vector input");
  RationalVector out;
  for (auto tok : tokens(line)) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const ParseError &e) {
      fail(in, e.what());
    }
  }
  if (!in.rest_blank())
    fail(in, "vector must be a single line");
  return out;
}

std::string format_decomposition(const ConvexCombination &c, bool with_checksum) {
  std::string out;
  for (const auto &term : c.terms())
    out += to_string(term.coefficient) + "\n" + format_matrix(term.matrix);
  if (with_checksum)
    out += "recombined\n" + format_matrix(c.recombine());
  return out;
}

ConvexCombination parse_decomposition(std::string_view text) {
  LineReader in(text);
  std::vector<ConvexTerm> terms;
  std::optional<RationalMatrix> checksum;
  std::string_view line;
  while (in.next_nonblank(line)) {
    auto t = tokens(line);
    if (t.size() == 1 && t[0] == "recombined") {
      if (!in.next(line))
        fail(in, "missing recombined matrix");
      checksum = read_body(in, parse_order(in, line));
      if (!in.rest_blank())
        fail(in, "text after the recombined matrix");
      break;
    }
    if (t.size() != 1)
      fail(in, "expected a coefficient");
    Rational coefficient;
    try {
      coefficient = parse_rational(t[0]);
    } catch (const ParseError &e) {
      fail(in, e.what());
    }
    if (!in.next(line))
      fail(in, "missing matrix after coefficient");
    auto m = read_body(in, parse_order(in, line));
    try {
      terms.push_back({coefficient, validate_asm(m)});
    } catch (const InvalidAsm &e) {
      fail(in, std::string("term is not an ASM: ") + e.what());
    }
  }
  ConvexCombination combination = [&] {
    try {
      return ConvexCombination(std::move(terms));
    } catch (const std::invalid_argument &e) {
      throw ParseError(std::string("invalid decomposition: ") + e.what());
    }
  }();
  if (checksum && !(combination.recombine() == *checksum))
    throw ParseError("recombined checksum does not match the terms");
  return combination;
}

std::string format_lattice(const FaceLattice &lattice) {
  std::ostringstream out;
  out << "lattice " << lattice.n << "\n";
  out << "f-vector";
  for (auto f : lattice.f_vector())
    out << ' ' << f;
  out << "\nfaces " << lattice.faces.size() << "\n";
  for (const auto &face : lattice.faces) {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(grid_hash(face.grid)));
    out << face.dimension << ' ' << face.vertex_ids.size() << ' ' << hash;
    for (const auto &e : face.grid.edges())
      out << ' ' << edge_text(e);
    out << "\n";
  }
  out << "covers " << lattice.covers.size() << "\n";
  for (auto [lo, hi] : lattice.covers)
    out << lo << ' ' << hi << "\n";
  return out.str();
}

} // namespace asmpoly
