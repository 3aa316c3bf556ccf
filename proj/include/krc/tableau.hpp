#pragma once

#include <string>
#include <vector>

/*
 * Rectangular semistandard tableaux over the alphabet {1..n}.
 *
 * A k x l rectangle with weakly increasing rows and strictly increasing
 * columns automatically confines row i (1-based) to the letters
 * [i, i+n-k], so no separate letter-window check is needed.  Shapes are
 * restricted to 1 <= k <= n-1 and l >= 1.
 *
 * Two reading conventions:
 *   crystal_word : columns left to right, each column read bottom to top
 *   row_word     : rows bottom to top, each row read left to right
 *
 * dual() complements every column inside {1..n} and reverses the column
 * order, sending a k x l rectangle to an (n-k) x l one.
 */

namespace krc {

struct RectTableau {
    int n = 0;    /* alphabet size */
    int rows = 0; /* k */
    int cols = 0; /* l */
    std::vector<int> cells; /* row-major, rows.size() == rows*cols */

    int at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
    int& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }

    auto operator<=>(const RectTableau&) const = default;
};

/* row i (0-based) filled with the letter i+1; the classical highest element */
RectTableau classical_highest(int n, int k, int l);

bool is_semistandard(const RectTableau& t);

/* throws std::invalid_argument with a description when t is not a valid element */
void require_valid(const RectTableau& t);

/* multiplicity of each letter, size n */
std::vector<int> content(const RectTableau& t);

std::vector<int> crystal_word(const RectTableau& t);
std::vector<int> row_word(const RectTableau& t);

RectTableau dual(const RectTableau& t);

/* all elements of the k x l crystal, sorted lexicographically by row_word */
std::vector<RectTableau> enumerate_crystal(int n, int k, int l);

/* |B^{k,l}| by the product formula, without enumerating */
int64_t crystal_size(int n, int k, int l);

/* text form: rows joined by '/', cells by ',', e.g. "1,1,3/2,2,4" */
std::string to_text(const RectTableau& t);
RectTableau rect_from_text(int n, const std::string& text);

} /* namespace krc */
