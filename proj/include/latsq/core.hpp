#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsq {

// Symbols are 1-based throughout: an order-n square is filled with 1..n and
// the element adjoined by a prolongation is always n+1.

struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Raw n-by-n symbol array, row-major. Carries no Latin property by itself;
// see validate() and LatinSquare.
struct Grid {
  int order = 0;
  std::vector<int> cells;

  Grid() = default;
  explicit Grid(int n) : order(n), cells(static_cast<std::size_t>(n) * n, 0) {}

  int at(int r, int c) const { return cells[idx(r, c)]; }
  int& at(int r, int c) { return cells[idx(r, c)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * order + (c - 1);
  }
};

// Verdict of the Latin property check. The offending cell is the first one in
// row-major order whose symbol already occurred earlier in its row or column;
// the row is checked before the column.
struct Validity {
  enum class Kind { ok, symbol_out_of_range, row_duplicate, column_duplicate };

  Kind kind = Kind::ok;
  Cell cell;
  int symbol = 0;

  bool ok() const { return kind == Kind::ok; }
  std::string message() const;
};

Validity validate(const Grid& grid);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bijection of {1..n} onto itself, stored as the image array.
class Permutation {
 public:
  static Permutation identity(int n);
  // Throws std::invalid_argument unless images is a rearrangement of 1..n.
  static Permutation from_images(std::vector<int> images);
  // Text form is comma-separated 1-based images, e.g. "4,2,1,5,3".
  static Permutation parse(const std::string& text);

  int order() const { return static_cast<int>(images_.size()); }
  int of(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image arrays; fixes the order of enumeration results.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// (f * g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

// Order-n table over 1..n whose rows and columns are all permutations.
// Doubles as a quasigroup multiplication table: at(x, y) = x * y.
class LatinSquare {
 public:
  // Both factories throw std::invalid_argument when the array is not Latin.
  static LatinSquare from_grid(Grid grid);
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return grid_.order; }
  int at(int r, int c) const { return grid_.at(r, c); }
  const Grid& grid() const { return grid_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  explicit LatinSquare(Grid g) : grid_(std::move(g)) {}

  Grid grid_;
};

// Text format: optional '#' comment lines, an optional "zero-based" directive
// line, the order n, then n rows of n integers. With the directive the file
// carries 0..n-1 and is normalized to 1..n on read. Serialization always
// emits 1-based symbols, single spaces, newline-terminated rows.
Grid parse_grid(std::istream& in);
LatinSquare parse_square(std::istream& in);
LatinSquare parse_square(const std::string& text);
void serialize(const LatinSquare& square, std::ostream& out);
std::string to_text(const LatinSquare& square);

// M with M(alpha(x), beta(y)) = gamma(L(x, y)).
LatinSquare apply_isotopy(const LatinSquare& square, const Permutation& alpha,
                          const Permutation& beta, const Permutation& gamma);

// Addition table of Z_n on symbols 1..n: at(x, y) = ((x-1)+(y-1) mod n) + 1.
LatinSquare cyclic_table(int n);
// The Klein four-group with identity 1.
LatinSquare klein_table();

}  // namespace latsq
