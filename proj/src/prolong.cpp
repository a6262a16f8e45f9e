#include "latsq/prolong.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

namespace latsq {

namespace {

std::string defect_list(const std::vector<int>& defect) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < defect.size(); ++i) {
    if (i) out << ", ";
    out << defect[i];
  }
  out << '}';
  return out.str();
}

MappingClassification require_complete(const LatinSquare& square, const Permutation& sigma) {
  auto cls = classify(square, sigma);
  if (cls.kind != MappingKind::complete)
    throw std::invalid_argument("mapping is not complete; defect " + defect_list(cls.defect));
  return cls;
}

// The interior of every construction: source cells survive off the track
// y = sigma(x), and the track becomes q except at the single kept cell
// (kept = 0 means nothing is kept).
void fill_interior(Grid& g, const LatinSquare& square, const Permutation& sigma, int q,
                   int kept_row) {
  const int n = square.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (y != sigma.of(x))
        g.at(x, y) = square.at(x, y);
      else
        g.at(x, y) = (x == kept_row) ? square.at(x, y) : q;
    }
}

Prolongation finish(Grid g, ProlongationSpec spec) {
  const int q = g.order;
  Prolongation out{LatinSquare::from_grid(std::move(g)), std::move(spec), q};
  return out;
}

}  // namespace

const char* to_string(ProlongMethod method) {
  switch (method) {
    case ProlongMethod::classical:
      return "classical";
    case ProlongMethod::belyavskaya:
      return "belyavskaya";
    case ProlongMethod::deriyenko_dudek:
      return "dd";
  }
  return "?";
}

Prolongation prolong_classical(const LatinSquare& square, const Permutation& sigma) {
  auto cls = require_complete(square, sigma);
  const int n = square.order();
  const int q = n + 1;
  const Permutation sigma_inv = sigma.inverse();

  Grid g(q);
  fill_interior(g, square, sigma, q, 0);
  for (int x = 1; x <= n; ++x) g.at(x, q) = cls.conjugate.of(x);
  for (int y = 1; y <= n; ++y) g.at(q, y) = cls.conjugate.of(sigma_inv.of(y));
  g.at(q, q) = q;
  return finish(std::move(g), {ProlongMethod::classical, sigma, {}, {}});
}

Prolongation prolong_classical_idempotent(const LatinSquare& square) {
  const Permutation id = Permutation::identity(square.order());
  if (!conjugate(square, id).is_bijection())
    throw std::invalid_argument("diagonal is not a bijection");
  return prolong_classical(square, id);
}

Prolongation prolong_belyavskaya(const LatinSquare& square, const Permutation& sigma,
                                 int a) {
  const int n = square.order();
  if (a < 1 || a > n)
    throw std::invalid_argument("a = " + std::to_string(a) + " out of range 1.." +
                                std::to_string(n));
  auto cls = require_complete(square, sigma);
  const int q = n + 1;
  const Permutation sigma_inv = sigma.inverse();

  int x_a = 0;
  for (int x = 1; x <= n; ++x)
    if (cls.conjugate.of(x) == a) x_a = x;
  assert(x_a != 0);

  Grid g(q);
  fill_interior(g, square, sigma, q, x_a);
  for (int x = 1; x <= n; ++x) g.at(x, q) = (x == x_a) ? q : cls.conjugate.of(x);
  for (int y = 1; y <= n; ++y)
    g.at(q, y) = (y == sigma.of(x_a)) ? q : cls.conjugate.of(sigma_inv.of(y));
  g.at(q, q) = a;
  return finish(std::move(g), {ProlongMethod::belyavskaya, sigma, a, {}});
}

Prolongation prolong_deriyenko_dudek(const LatinSquare& square, const Permutation& sigma,
                                     int x1) {
  auto cls = classify(square, sigma);
  if (cls.kind != MappingKind::quasicomplete)
    throw std::invalid_argument("mapping is not quasicomplete; defect " +
                                defect_list(cls.defect));
  const auto [p1, p2] = *cls.special_preimages;
  if (x1 != p1 && x1 != p2)
    throw std::invalid_argument("x1 = " + std::to_string(x1) +
                                " is not a preimage of the special element; expected " +
                                std::to_string(p1) + " or " + std::to_string(p2));
  const int x2 = (x1 == p1) ? p2 : p1;
  const int a = *cls.special;
  const int d = cls.defect.front();
  const int n = square.order();
  const int q = n + 1;
  const Permutation sigma_inv = sigma.inverse();

  Grid g(q);
  fill_interior(g, square, sigma, q, x1);
  for (int x = 1; x <= n; ++x) {
    if (x == x1)
      g.at(x, q) = q;
    else if (x == x2)
      g.at(x, q) = a;
    else
      g.at(x, q) = cls.conjugate.of(x);
  }
  for (int y = 1; y <= n; ++y) {
    if (y == sigma.of(x1))
      g.at(q, y) = q;
    else if (y == sigma.of(x2))
      g.at(q, y) = a;
    else
      g.at(q, y) = cls.conjugate.of(sigma_inv.of(y));
  }
  g.at(q, q) = d;
  return finish(std::move(g), {ProlongMethod::deriyenko_dudek, sigma, {}, x1});
}

void serialize(const Prolongation& prolongation, std::ostream& out) {
  out << "# prolongation method=" << to_string(prolongation.spec.method)
      << " sigma=" << prolongation.spec.sigma.to_string();
  if (prolongation.spec.a) out << " a=" << *prolongation.spec.a;
  if (prolongation.spec.x1) out << " x1=" << *prolongation.spec.x1;
  out << '\n';
  serialize(prolongation.result, out);
}

std::string to_text(const Prolongation& prolongation) {
  std::ostringstream out;
  serialize(prolongation, out);
  return out.str();
}

}  // namespace latsq
