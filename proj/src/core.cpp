#include "latsq/core.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace latsq {

namespace {

std::string trimmed(const std::string& line) {
  auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

bool parse_int(const std::string& token, int& out) {
  if (token.empty()) return false;
  std::size_t i = token[0] == '-' ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  try {
    out = std::stoi(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

std::string Validity::message() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::ok:
      out << "valid";
      break;
    case Kind::symbol_out_of_range:
      out << "symbol " << symbol << " out of range at row " << cell.row << ", column "
          << cell.col;
      break;
    case Kind::row_duplicate:
      out << "row " << cell.row << " repeats symbol " << symbol << " at column "
          << cell.col;
      break;
    case Kind::column_duplicate:
      out << "column " << cell.col << " repeats symbol " << symbol << " at row "
          << cell.row;
      break;
  }
  return out.str();
}

Validity validate(const Grid& grid) {
  const int n = grid.order;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const int s = grid.at(r, c);
      if (s < 1 || s > n)
        return {Validity::Kind::symbol_out_of_range, {r, c}, s};
      for (int cc = 1; cc < c; ++cc)
        if (grid.at(r, cc) == s)
          return {Validity::Kind::row_duplicate, {r, c}, s};
      for (int rr = 1; rr < r; ++rr)
        if (grid.at(rr, c) == s)
          return {Validity::Kind::column_duplicate, {r, c}, s};
    }
  }
  return {};
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation order must be nonnegative");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("images are not a bijection of 1.." + std::to_string(n));
    seen[v] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> images;
  std::string token;
  std::istringstream in(trimmed(text));
  while (std::getline(in, token, ',')) {
    int v = 0;
    if (!parse_int(trimmed(token), v))
      throw ParseError("bad permutation token '" + trimmed(token) + "' in '" + text + "'");
    images.push_back(v);
  }
  if (images.empty()) throw ParseError("empty permutation text");
  try {
    return from_images(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= order(); ++x) inv[of(x) - 1] = x;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i];
  }
  return out.str();
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("cannot compose permutations of different orders");
  std::vector<int> images(f.order());
  for (int x = 1; x <= f.order(); ++x) images[x - 1] = f.of(g.of(x));
  return Permutation::from_images(std::move(images));
}

LatinSquare LatinSquare::from_grid(Grid grid) {
  if (grid.order <= 0) throw std::invalid_argument("square order must be positive");
  if (grid.cells.size() != static_cast<std::size_t>(grid.order) * grid.order)
    throw std::invalid_argument("grid cell count does not match its order");
  const Validity v = validate(grid);
  if (!v.ok()) throw std::invalid_argument(v.message());
  return LatinSquare(std::move(grid));
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Grid g(n);
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != n)
      throw std::invalid_argument("row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r - 1].size()) + " entries, expected " +
                                  std::to_string(n));
    for (int c = 1; c <= n; ++c) g.at(r, c) = rows[r - 1][c - 1];
  }
  return from_grid(std::move(g));
}

std::vector<std::vector<int>> LatinSquare::rows() const {
  std::vector<std::vector<int>> out(order(), std::vector<int>(order()));
  for (int r = 1; r <= order(); ++r)
    for (int c = 1; c <= order(); ++c) out[r - 1][c - 1] = at(r, c);
  return out;
}

Grid parse_grid(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool zero_based = false;
  int n = -1;

  while (n < 0 && std::getline(in, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "zero-based") {
      if (zero_based)
        throw ParseError("line " + std::to_string(lineno) + ": repeated zero-based directive");
      zero_based = true;
      continue;
    }
    if (!parse_int(t, n) || n <= 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected a positive order, got '" + t + "'");
  }
  if (n <= 0) throw ParseError("missing order line");

  const int lo = zero_based ? 0 : 1;
  const int hi = zero_based ? n - 1 : n;
  Grid g(n);
  int r = 0;
  while (r < n && std::getline(in, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    ++r;
    std::istringstream row(t);
    std::string token;
    for (int c = 1; c <= n; ++c) {
      if (!(row >> token))
        throw ParseError("row " + std::to_string(r) + " has " + std::to_string(c - 1) +
                         " entries, expected " + std::to_string(n));
      int v = 0;
      if (!parse_int(token, v))
        throw ParseError("row " + std::to_string(r) + ", column " + std::to_string(c) +
                         ": '" + token + "' is not an integer");
      if (v < lo || v > hi)
        throw ParseError("row " + std::to_string(r) + ", column " + std::to_string(c) +
                         ": symbol " + std::to_string(v) + " out of range " +
                         std::to_string(lo) + ".." + std::to_string(hi));
      g.at(r, c) = v + (zero_based ? 1 : 0);
    }
    if (row >> token)
      throw ParseError("row " + std::to_string(r) + " has more than " + std::to_string(n) +
                       " entries");
  }
  if (r < n)
    throw ParseError("unexpected end of input after " + std::to_string(r) + " of " +
                     std::to_string(n) + " rows");
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (!t.empty() && t[0] != '#')
      throw ParseError("line " + std::to_string(lineno) + ": trailing content '" + t + "'");
  }
  return g;
}

LatinSquare parse_square(std::istream& in) {
  Grid g = parse_grid(in);
  const Validity v = validate(g);
  if (!v.ok()) throw ParseError(v.message());
  return LatinSquare::from_grid(std::move(g));
}

LatinSquare parse_square(const std::string& text) {
  std::istringstream in(text);
  return parse_square(in);
}

void serialize(const LatinSquare& square, std::ostream& out) {
  const int n = square.order();
  out << n << '\n';
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (c > 1) out << ' ';
      out << square.at(r, c);
    }
    out << '\n';
  }
}

std::string to_text(const LatinSquare& square) {
  std::ostringstream out;
  serialize(square, out);
  return out.str();
}

LatinSquare apply_isotopy(const LatinSquare& square, const Permutation& alpha,
                          const Permutation& beta, const Permutation& gamma) {
  const int n = square.order();
  if (alpha.order() != n || beta.order() != n || gamma.order() != n)
    throw std::invalid_argument("isotopy components must have the square's order");
  Grid g(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      g.at(alpha.of(x), beta.of(y)) = gamma.of(square.at(x, y));
  return LatinSquare::from_grid(std::move(g));
}

LatinSquare cyclic_table(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  Grid g(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) g.at(x, y) = (x - 1 + y - 1) % n + 1;
  return LatinSquare::from_grid(std::move(g));
}

LatinSquare klein_table() {
  return LatinSquare::from_rows({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
}

}  // namespace latsq
