#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "latsq/core.hpp"
#include "latsq/mappings.hpp"

namespace latsq {

enum class ProlongMethod { classical, belyavskaya, deriyenko_dudek };

// Short method tag, as used by the CLI and in serialized headers.
const char* to_string(ProlongMethod method);

struct ProlongationSpec {
  ProlongMethod method = ProlongMethod::classical;
  Permutation sigma = Permutation::identity(0);
  std::optional<int> a;   // belyavskaya
  std::optional<int> x1;  // deriyenko_dudek
};

// An order-(n+1) square built from an order-n one. The adjoined element is
// always q = n+1, and cells (i, j) with i, j <= n, j != sigma(i) keep their
// source values.
struct Prolongation {
  LatinSquare result;
  ProlongationSpec spec;
  int q = 0;
};

// Requires a complete sigma. Track cells (x, sigma(x)) become q, the freed
// values sigma-bar(x) = x * sigma(x) fill the new column, their preimages the
// new row, and the corner is q.
Prolongation prolong_classical(const LatinSquare& square, const Permutation& sigma);

// prolong_classical with sigma = identity; requires a bijective diagonal.
// The result is then a loop with identity q.
Prolongation prolong_classical_idempotent(const LatinSquare& square);

// Requires a complete sigma. Same as the classical construction except at
// x_a, the unique element with x_a * sigma(x_a) = a: its track cell keeps a,
// its border cells take q, and the corner is a.
Prolongation prolong_belyavskaya(const LatinSquare& square, const Permutation& sigma,
                                 int a);

// Requires a quasicomplete sigma; x1 must be one of the two preimages of the
// special element a, x2 is the other, d the missed element. The x1 track cell
// keeps a, x2's border cells take a, x1's take q, and the corner is d.
Prolongation prolong_deriyenko_dudek(const LatinSquare& square, const Permutation& sigma,
                                     int x1);

// The result square preceded by a comment header recording method, sigma and
// parameters. Parses back as a plain square.
void serialize(const Prolongation& prolongation, std::ostream& out);
std::string to_text(const Prolongation& prolongation);

}  // namespace latsq
