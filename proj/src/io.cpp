#include "ybe/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ybe {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok, int lo, int hi,
              const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing junk");
    if (v < lo || v > hi) throw std::out_of_range("range");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string(what) + ": bad value '" + tok + "'");
  }
}

}  // namespace

QuadraticSet parse_ybs_stream(std::istream& in) {
  auto lines = tokenize(in);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of file, expected ") + what);
    return lines[at];
  };

  {
    const Line& header = need("'ybs 1' header");
    if (header.tokens.size() != 2 || header.tokens[0] != "ybs" ||
        header.tokens[1] != "1")
      throw ParseError(header.number, "bad header, expected 'ybs 1'");
    ++at;
  }
  int n = 0;
  {
    const Line& size = need("'n <N>'");
    if (size.tokens.size() != 2 || size.tokens[0] != "n")
      throw ParseError(size.number, "expected 'n <N>'");
    n = parse_int(size, size.tokens[1], 1, 1 << 16, "n");
    ++at;
  }

  QuadraticSet q;
  q.n = n;
  if (at < lines.size() && lines[at].tokens[0] == "labels") {
    const Line& lab = need("labels");
    if (static_cast<int>(lab.tokens.size()) != n + 1)
      throw ParseError(lab.number, "labels: expected exactly n names");
    q.labels.assign(lab.tokens.begin() + 1, lab.tokens.end());
    ++at;
  }

  std::vector<int> left_row_lines(n, 1);
  auto read_rows = [&](const char* kind, std::vector<int>* row_lines) {
    std::vector<int> table(std::size_t(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      const Line& row = need("action row");
      if (row.tokens[0] != kind)
        throw ParseError(row.number,
                         std::string("expected '") + kind + " <i>: ...' row");
      std::string idx_tok = row.tokens.size() > 1 ? row.tokens[1] : "";
      std::size_t first_entry;
      if (!idx_tok.empty() && idx_tok.back() == ':') {
        idx_tok.pop_back();
        first_entry = 2;
      } else if (row.tokens.size() > 2 && row.tokens[2] == ":") {
        first_entry = 3;
      } else {
        throw ParseError(row.number, "row: expected '<i>: <n entries>'");
      }
      if (static_cast<int>(row.tokens.size()) != n + static_cast<int>(first_entry))
        throw ParseError(row.number, "row: wrong number of entries");
      int idx = parse_int(row, idx_tok, 1, n, "row index") - 1;
      if (idx != i) throw ParseError(row.number, "rows must appear in order 1..n");
      if (row_lines) (*row_lines)[idx] = row.number;
      for (int j = 0; j < n; ++j)
        table[std::size_t(idx) * n + j] =
            parse_int(row, row.tokens[first_entry + j], 1, n, "entry") - 1;
      ++at;
    }
    return table;
  };

  q.left = read_rows("L", &left_row_lines);
  if (at < lines.size() && lines[at].tokens[0] == "R") {
    // R line i lists x_k ^ {x_i}, i.e. the permutation R_{x_i}; that is the
    // i-th column of the right table.
    std::vector<int> by_actor = read_rows("R", nullptr);
    q.right.assign(std::size_t(n) * n, -1);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        q.right[std::size_t(k) * n + i] = by_actor[std::size_t(i) * n + k];
    q.lri_derived = false;
  } else {
    // derive right rows as inverses of left rows
    q.right.assign(std::size_t(n) * n, -1);
    for (int x = 0; x < n; ++x) {
      std::vector<int> inv(n, -1);
      for (int y = 0; y < n; ++y) {
        int v = q.lact(x, y);
        if (inv[v] != -1)
          throw ParseError(left_row_lines[x],
                           "L row " + std::to_string(x + 1) +
                               " is not a bijection; cannot derive R");
        inv[v] = y;
      }
      for (int y = 0; y < n; ++y) q.right[std::size_t(y) * n + x] = inv[y];
    }
    q.lri_derived = true;
  }
  if (at < lines.size())
    throw ParseError(lines[at].number, "unexpected trailing content");
  return q;
}

QuadraticSet parse_ybs(const std::string& text) {
  std::istringstream in(text);
  return parse_ybs_stream(in);
}

std::string write_ybs(const QuadraticSet& q) {
  std::ostringstream out;
  out << "ybs 1\n";
  out << "n " << q.n << "\n";
  if (!q.labels.empty()) {
    out << "labels";
    for (const auto& l : q.labels) out << ' ' << l;
    out << "\n";
  }
  for (int x = 0; x < q.n; ++x) {
    out << "L " << (x + 1) << ":";
    for (int y = 0; y < q.n; ++y) out << ' ' << (q.lact(x, y) + 1);
    out << "\n";
  }
  if (!q.lri_derived) {
    for (int x = 0; x < q.n; ++x) {
      out << "R " << (x + 1) << ":";
      for (int y = 0; y < q.n; ++y) out << ' ' << (q.ract(y, x) + 1);
      out << "\n";
    }
  }
  return out.str();
}

std::string export_dot(const QuadraticSet& q, bool include_loops) {
  PropertyFlags f = classify(q);
  if (!f.lri)
    throw std::invalid_argument("export_dot: lri fails, graph not defined");
  auto labels = q.label_vec();
  std::ostringstream out;
  out << "digraph action {\n";
  for (int x = 0; x < q.n; ++x) out << "  \"" << labels[x] << "\";\n";
  for (int x = 0; x < q.n; ++x)
    for (int a = 0; a < q.n; ++a) {
      int y = q.lact(a, x);
      if (y == x && !include_loops) continue;
      out << "  \"" << labels[x] << "\" -> \"" << labels[y] << "\" [label=\""
          << labels[a] << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace ybe
