#include "krc/promotion.hpp"

#include <limits>
#include <stdexcept>

namespace krc {

namespace {

constexpr int kHole = 0;

} /* namespace */

RectTableau promotion(const RectTableau& t) {
    const int n = t.n, k = t.rows, l = t.cols;
    RectTableau g = t;

    if (k == 1) {
        /* sorted row: the n's are the suffix, slides degenerate to a shift */
        int first = l;
        while (first > 0 && t.cells[static_cast<size_t>(first - 1)] == n) --first;
        const int holes = l - first;
        for (int c = 0; c < holes; ++c) g.cells[static_cast<size_t>(c)] = 1;
        for (int c = 0; c < first; ++c) g.cells[static_cast<size_t>(holes + c)] = t.cells[static_cast<size_t>(c)] + 1;
        if (!is_semistandard(g)) throw std::logic_error("promotion produced an invalid tableau");
        return g;
    }

    int first = l;
    while (first > 0 && g.at(k - 1, first - 1) == n) --first;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < l; ++c)
            if (g.at(r, c) == n && !(r == k - 1 && c >= first))
                throw std::logic_error("letter n found outside the bottom-row suffix");
    for (int c = first; c < l; ++c) g.at(k - 1, c) = kHole;

    int rested = 0;
    for (int c0 = first; c0 < l; ++c0) {
        int r = k - 1, c = c0;
        while (true) {
            const int north = (r > 0 && g.at(r - 1, c) != kHole) ? g.at(r - 1, c) : -1;
            const int west = (c > 0 && g.at(r, c - 1) != kHole) ? g.at(r, c - 1) : -1;
            if (north < 0 && west < 0) break;
            if (north >= west) {
                g.at(r, c) = north;
                g.at(--r, c) = kHole;
            } else {
                g.at(r, c) = west;
                g.at(r, --c) = kHole;
            }
        }
        if (r != 0 || c != rested) throw std::logic_error("promotion hole rested off the top-row prefix");
        ++rested;
    }

    for (int& v : g.cells) v = (v == kHole) ? 1 : v + 1;
    if (!is_semistandard(g)) throw std::logic_error("promotion produced an invalid tableau");
    return g;
}

RectTableau promotion_inverse(const RectTableau& t) {
    const int n = t.n, k = t.rows, l = t.cols;
    RectTableau g = t;

    if (k == 1) {
        int ones = 0;
        while (ones < l && t.cells[static_cast<size_t>(ones)] == 1) ++ones;
        for (int c = ones; c < l; ++c) g.cells[static_cast<size_t>(c - ones)] = t.cells[static_cast<size_t>(c)] - 1;
        for (int c = l - ones; c < l; ++c) g.cells[static_cast<size_t>(c)] = n;
        if (!is_semistandard(g)) throw std::logic_error("inverse promotion produced an invalid tableau");
        return g;
    }

    int m = 0;
    while (m < l && g.at(0, m) == 1) ++m;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < l; ++c)
            if (g.at(r, c) == 1 && !(r == 0 && c < m))
                throw std::logic_error("letter 1 found outside the top-row prefix");
    for (int& v : g.cells) v = v - 1;
    for (int c = 0; c < m; ++c) g.at(0, c) = kHole;

    constexpr int none = std::numeric_limits<int>::max();
    int rested = l;
    for (int c0 = m - 1; c0 >= 0; --c0) {
        int r = 0, c = c0;
        while (true) {
            const int south = (r < k - 1 && g.at(r + 1, c) != kHole) ? g.at(r + 1, c) : none;
            const int east = (c < l - 1 && g.at(r, c + 1) != kHole) ? g.at(r, c + 1) : none;
            if (south == none && east == none) break;
            if (south <= east) {
                g.at(r, c) = south;
                g.at(++r, c) = kHole;
            } else {
                g.at(r, c) = east;
                g.at(r, ++c) = kHole;
            }
        }
        --rested;
        if (r != k - 1 || c != rested)
            throw std::logic_error("inverse promotion hole rested off the bottom-row suffix");
    }

    for (int& v : g.cells) v = (v == kHole) ? n : v;
    if (!is_semistandard(g)) throw std::logic_error("inverse promotion produced an invalid tableau");
    return g;
}

} /* namespace krc */
