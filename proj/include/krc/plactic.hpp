#pragma once

#include "krc/tableau.hpp"

#include <vector>

/*
 * Partition-shaped tableaux and the plactic (Schensted) product.
 *
 * row_insert bumps by rows: the inserted letter replaces the leftmost
 * entry strictly greater than it, the displaced entry recurses into the
 * next row, and a letter with nothing greater extends the row.
 *
 * plactic_product(a, b) inserts the letters of row_word(b), in order,
 * into a.  The product of two rectangles is generally not rectangular,
 * hence the separate carrier type.
 */

namespace krc {

struct GeneralTableau {
    int n = 0;
    std::vector<std::vector<int>> rows; /* top to bottom */

    auto operator<=>(const GeneralTableau&) const = default;
};

GeneralTableau from_rect(const RectTableau& t);

/* partition shape, rows weakly increasing, columns strictly increasing, letters in 1..n */
bool validate(const GeneralTableau& t);

std::vector<int> row_word(const GeneralTableau& t);
std::vector<int> general_content(const GeneralTableau& t);

GeneralTableau row_insert(GeneralTableau t, int x);

GeneralTableau plactic_product(const GeneralTableau& a, const std::vector<int>& word);
GeneralTableau plactic_product(const RectTableau& a, const RectTableau& b);
GeneralTableau plactic_product(const GeneralTableau& a, const RectTableau& b);

} /* namespace krc */
