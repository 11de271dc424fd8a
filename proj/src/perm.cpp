#include "ybe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ybe {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("from_cycles: point out of range");
      if (img[from] != from)
        throw std::invalid_argument("from_cycles: cycles are not disjoint");
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

unsigned long long Permutation::order() const {
  unsigned long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, (unsigned long long)c.size());
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;  // already min-first and sorted by construction order
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Permutation(std::move(img));
}

Permutation shift(const Permutation& p, int offset, int new_degree) {
  std::vector<int> img(new_degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (p(i) == i) continue;
    if (i + offset < 0 || i + offset >= new_degree || p(i) + offset >= new_degree)
      throw std::invalid_argument("shift: support overflows new degree");
    img[i + offset] = p(i) + offset;
  }
  return Permutation(std::move(img));
}

Permutation vee(const Permutation& rho, const Permutation& sigma) {
  if (rho.degree() != sigma.degree())
    throw std::invalid_argument("vee: degree mismatch");
  auto rc = rho.cycles(), sc = sigma.cycles();
  if (rc.size() != 1 || sc.size() != 1 || rc[0].size() != sc[0].size())
    throw std::invalid_argument("vee: inputs must be single cycles of equal length");
  for (int x : rc[0])
    if (sigma(x) != x) throw std::invalid_argument("vee: cycles are not disjoint");
  std::vector<int> interleaved;
  for (std::size_t i = 0; i < rc[0].size(); ++i) {
    interleaved.push_back(rc[0][i]);
    interleaved.push_back(sc[0][i]);
  }
  return Permutation::from_cycles(rho.degree(), {interleaved});
}

namespace {

std::vector<std::string> default_labels(int degree) {
  std::vector<std::string> labels(degree);
  for (int i = 0; i < degree; ++i) labels[i] = "x" + std::to_string(i + 1);
  return labels;
}

int lookup_point(const std::string& tok, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == tok) return static_cast<int>(i);
  // bare 1-based integer is accepted as well
  bool digits = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  if (digits) {
    int v = std::stoi(tok) - 1;
    if (v >= 0 && v < static_cast<int>(labels.size())) return v;
  }
  throw std::invalid_argument("parse_cycles: unknown label '" + tok + "'");
}

}  // namespace

Permutation parse_cycles(const std::string& text,
                         const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> cycles;
  std::vector<char> used(n, 0);
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' at position " +
                                  std::to_string(i));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("parse_cycles: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && !std::isspace((unsigned char)text[i]) &&
             text[i] != '(' && text[i] != ')' && text[i] != ',')
        ++i;
      if (i == start)
        throw std::invalid_argument("parse_cycles: malformed cycle");
      int pt = lookup_point(text.substr(start, i - start), labels);
      if (used[pt])
        throw std::invalid_argument("parse_cycles: repeated point '" +
                                    labels[pt] + "'");
      used[pt] = 1;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

Permutation parse_cycles(const std::string& text, int degree) {
  return parse_cycles(text, default_labels(degree));
}

std::string format_cycles(const Permutation& p,
                          const std::vector<std::string>& labels) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << labels[c[i]];
    }
    out << ')';
  }
  return out.str();
}

std::string format_cycles(const Permutation& p) {
  return format_cycles(p, default_labels(p.degree()));
}

}  // namespace ybe
