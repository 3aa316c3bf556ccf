#pragma once

#include "krc/tableau.hpp"

/*
 * Promotion on rectangular tableaux.
 *
 * promotion(t): delete every letter n (they fill a suffix of the bottom
 * row), slide each hole to the upper left by reverse jeu de taquin
 * (holes processed leftmost first; at each step the larger of the north
 * and west neighbours moves into the hole, north on ties), add 1 to
 * every remaining entry, and write 1 into the rested holes, which must
 * form a prefix of the top row.
 *
 * promotion_inverse undoes this: delete the 1s (a prefix of the top
 * row), subtract 1, slide holes to the lower right rightmost first
 * (smaller of south/east moves in, south on ties), and write n into the
 * rested holes at the end of the bottom row.
 *
 * Both are total bijections on each crystal; n-fold promotion is the
 * identity and content is shifted cyclically by one.  Structural
 * expectations that can only fail on an implementation bug throw
 * std::logic_error.
 */

namespace krc {

RectTableau promotion(const RectTableau& t);
RectTableau promotion_inverse(const RectTableau& t);

} /* namespace krc */
