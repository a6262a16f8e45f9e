#include "latsq/isotopy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace latsq {

namespace {

void require_comparable(const LatinSquare& first, const LatinSquare& second) {
  if (first.order() != second.order())
    throw std::invalid_argument("cannot compare squares of orders " +
                                std::to_string(first.order()) + " and " +
                                std::to_string(second.order()));
}

}  // namespace

std::optional<IsotopyWitness> are_isotopic(const LatinSquare& first,
                                           const LatinSquare& second) {
  require_comparable(first, second);
  const int n = first.order();
  if (n > kMaxIsotopyOrder)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " above supported bound " + std::to_string(kMaxIsotopyOrder));

  // 0-based copies for the hot loop; minv[r][t] is the column of t in row r.
  std::vector<int> l(n * n), m(n * n), minv(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      l[x * n + y] = first.at(x + 1, y + 1) - 1;
      m[x * n + y] = second.at(x + 1, y + 1) - 1;
      minv[x * n + (m[x * n + y])] = y;
    }

  std::vector<int> alpha(n), beta(n), gamma(n);
  std::iota(alpha.begin(), alpha.end(), 0);
  do {
    for (int b = 0; b < n; ++b) {
      // alpha plus beta(0) = b pin gamma along column 0, then beta along
      // row 0; both come out bijective, so only the remaining cells need a
      // check.
      for (int x = 0; x < n; ++x) gamma[l[x * n]] = m[alpha[x] * n + b];
      const int a0 = alpha[0];
      for (int y = 0; y < n; ++y) beta[y] = minv[a0 * n + gamma[l[y]]];
      bool ok = true;
      for (int x = 1; x < n && ok; ++x) {
        const int ax = alpha[x];
        for (int y = 1; y < n; ++y)
          if (gamma[l[x * n + y]] != m[ax * n + beta[y]]) {
            ok = false;
            break;
          }
      }
      if (ok) {
        auto lift = [n](const std::vector<int>& p) {
          std::vector<int> images(n);
          for (int i = 0; i < n; ++i) images[i] = p[i] + 1;
          return Permutation::from_images(std::move(images));
        };
        IsotopyWitness witness{lift(alpha), lift(beta), lift(gamma)};
        assert(verify_witness(first, second, witness));
        return witness;
      }
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return std::nullopt;
}

bool verify_witness(const LatinSquare& first, const LatinSquare& second,
                    const IsotopyWitness& witness) {
  require_comparable(first, second);
  const int n = first.order();
  if (witness.alpha.order() != n || witness.beta.order() != n || witness.gamma.order() != n)
    throw std::invalid_argument("witness components must have the squares' order");
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (witness.gamma.of(first.at(x, y)) !=
          second.at(witness.alpha.of(x), witness.beta.of(y)))
        return false;
  return true;
}

}  // namespace latsq
