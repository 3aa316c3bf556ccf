#pragma once

#include "krc/rmatrix.hpp"
#include "krc/tableau.hpp"

/*
 * The combinatorial K-matrix K : B -> B^vee and its affinization.
 *
 * k_matrix evaluates R_{B^vee,B}(b^vee (x) b) = c (x) c'; the first
 * output factor must be the dual of the second (std::logic_error
 * otherwise) and K(b) = c'.
 *
 * k_matrix_one_row is the closed form on single row crystals: shift
 * the content down cyclically by one letter and dualize.
 *
 * affine_k sends z^d b to z^{-d-H(b^vee (x) b)} K(b).
 */

namespace krc {

RectTableau k_matrix(const RectTableau& b);
RectTableau k_matrix_one_row(const RectTableau& b);

AffineElem affine_k(const AffineElem& zb);

} /* namespace krc */
