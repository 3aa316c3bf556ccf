#pragma once

#include "krc/tableau.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

/*
 * Affine crystal operations on rectangles and their tensor products.
 *
 * Classical operators (1 <= i <= n-1) follow the signature rule on the
 * column reading word: each letter i+1 is marked '+', each letter i is
 * marked '-', a '+' immediately left of a '-' cancels (repeatedly), and
 * then e_i rewrites the leftmost surviving '+' into an i while f_i
 * rewrites the rightmost surviving '-' into an i+1.  eps/phi count the
 * survivors.  The index 0 operators are conjugates of index 1 by
 * promotion.
 *
 * Tensor products follow
 *   e_i(b1 (x) b2) = e_i b1 (x) b2   iff  eps_i(b1) >  phi_i(b2)
 *   f_i(b1 (x) b2) = f_i b1 (x) b2   iff  eps_i(b1) >= phi_i(b2)
 * acting on the right factor otherwise, with a vanishing factor action
 * killing the whole product action.  Longer products associate to the
 * left; this equals running the signature fold over the factors'
 * reduced (phi, eps) blocks from left to right, which is how apply_e
 * and apply_f locate the acting factor.
 */

namespace krc {

struct CrystalShape {
    int n = 0;
    int k = 0;
    int l = 0;

    auto operator<=>(const CrystalShape&) const = default;
};

CrystalShape shape_of(const RectTableau& t);
CrystalShape dual_shape(CrystalShape s);

struct TensorElem {
    std::vector<RectTableau> factors; /* left to right, common alphabet */

    auto operator<=>(const TensorElem&) const = default;
};

int eps(int i, const RectTableau& t);
int phi(int i, const RectTableau& t);
std::optional<RectTableau> apply_e(int i, const RectTableau& t);
std::optional<RectTableau> apply_f(int i, const RectTableau& t);

int eps(int i, const TensorElem& x);
int phi(int i, const TensorElem& x);
std::optional<TensorElem> apply_e(int i, const TensorElem& x);
std::optional<TensorElem> apply_f(int i, const TensorElem& x);

std::vector<int> weight(const TensorElem& x);
bool is_classical_highest(const TensorElem& x);

/* greedy raising, smallest applicable classical index first; returns the trace of applied indices */
std::pair<TensorElem, std::vector<int>> to_highest(TensorElem x);

/*
 * The unique classical highest element of B_left (x) B_right with the
 * given weight.  The full weight-to-element map is built and cached per
 * ordered shape pair; zero or two matches for any arising weight throw
 * std::logic_error, since rectangles tensor multiplicity-free.
 */
TensorElem classical_highest_of_weight(CrystalShape left, CrystalShape right, const std::vector<int>& mu);

/* factor texts joined by '|' */
std::string to_text(const TensorElem& x);
TensorElem tensor_from_text(int n, const std::string& text);

} /* namespace krc */
