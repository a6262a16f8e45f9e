#pragma once

#include <optional>

#include "latsq/core.hpp"

namespace latsq {

// Triple (alpha, beta, gamma) with gamma(L(x, y)) = M(alpha(x), beta(y)).
struct IsotopyWitness {
  Permutation alpha;
  Permutation beta;
  Permutation gamma;

  friend bool operator==(const IsotopyWitness&, const IsotopyWitness&) = default;
};

// Exact decision bound; above it the search is refused rather than truncated.
inline constexpr int kMaxIsotopyOrder = 8;

// Exhaustive decision for orders up to kMaxIsotopyOrder. A returned witness
// is verified on all n^2 cells and is the lexicographically least triple in
// (alpha, beta, gamma) order; nullopt means no witness exists.
//
// Enumerates alpha in lexicographic order; alpha plus the choice of beta(1)
// force gamma along column 1 and then beta along row 1, so each candidate
// costs one n^2 check.
std::optional<IsotopyWitness> are_isotopic(const LatinSquare& first,
                                           const LatinSquare& second);

// Direct n^2 check of the witness relation.
bool verify_witness(const LatinSquare& first, const LatinSquare& second,
                    const IsotopyWitness& witness);

}  // namespace latsq
