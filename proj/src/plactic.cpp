#include "krc/plactic.hpp"

#include <algorithm>
#include <stdexcept>

namespace krc {

GeneralTableau from_rect(const RectTableau& t) {
    GeneralTableau g{t.n, {}};
    g.rows.reserve(static_cast<size_t>(t.rows));
    for (int r = 0; r < t.rows; ++r)
        g.rows.emplace_back(t.cells.begin() + static_cast<size_t>(r) * t.cols,
                            t.cells.begin() + static_cast<size_t>(r + 1) * t.cols);
    return g;
}

bool validate(const GeneralTableau& t) {
    if (t.n < 1) return false;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > t.n) return false;
            if (c > 0 && row[c - 1] > row[c]) return false;
            if (r > 0 && t.rows[r - 1][c] >= row[c]) return false;
        }
    }
    return true;
}

std::vector<int> row_word(const GeneralTableau& t) {
    std::vector<int> w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::vector<int> general_content(const GeneralTableau& t) {
    std::vector<int> m(static_cast<size_t>(t.n), 0);
    for (const auto& row : t.rows)
        for (int v : row) ++m[static_cast<size_t>(v - 1)];
    return m;
}

GeneralTableau row_insert(GeneralTableau t, int x) {
    if (x < 1 || x > t.n) throw std::invalid_argument("inserted letter outside {1..n}");
    size_t r = 0;
    while (true) {
        if (r == t.rows.size()) {
            t.rows.push_back({x});
            return t;
        }
        auto& row = t.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return t;
        }
        std::swap(*it, x);
        ++r;
    }
}

GeneralTableau plactic_product(const GeneralTableau& a, const std::vector<int>& word) {
    GeneralTableau p = a;
    for (int x : word) p = row_insert(std::move(p), x);
    return p;
}

GeneralTableau plactic_product(const RectTableau& a, const RectTableau& b) {
    if (a.n != b.n) throw std::invalid_argument("plactic product requires a common alphabet");
    return plactic_product(from_rect(a), row_word(b));
}

GeneralTableau plactic_product(const GeneralTableau& a, const RectTableau& b) {
    if (a.n != b.n) throw std::invalid_argument("plactic product requires a common alphabet");
    return plactic_product(a, row_word(b));
}

} /* namespace krc */
