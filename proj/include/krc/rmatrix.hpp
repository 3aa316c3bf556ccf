#pragma once

#include "krc/crystal.hpp"

#include <cstddef>
#include <utility>

/*
 * The combinatorial R-matrix by two independent algorithms, the energy
 * function, and the affinized R.
 *
 * combinatorial_r raises b1 (x) b2 to its classical highest element,
 * jumps to the unique classical highest element of equal weight in
 * B2 (x) B1, and replays the recorded raising trace backwards with
 * lowering operators.  Any vanished replay step throws
 * std::logic_error.
 *
 * plactic_r factorizes the tableau product b1 . b2 over B2 x B1
 * instead.  The factorization table of an ordered pair is built once
 * (a scan of all of B2 x B1) and must be injective; that assert is the
 * uniqueness claim of the product decomposition.
 *
 * energy_h is table backed and anchored at H(u1 (x) u2) = 0.
 */

namespace krc {

TensorElem combinatorial_r(const TensorElem& x);

inline constexpr size_t kPlacticOracleBound = 500000;
TensorElem plactic_r(const TensorElem& x, size_t bound = kPlacticOracleBound);

int energy_h(const TensorElem& x);

struct AffineElem {
    int d = 0;
    RectTableau t;

    auto operator<=>(const AffineElem&) const = default;
};

/* z^{d1} b1 (x) z^{d2} b2  |->  z^{d2+H} c2 (x) z^{d1-H} c1 */
std::pair<AffineElem, AffineElem> affine_r(const AffineElem& a, const AffineElem& b);

} /* namespace krc */
