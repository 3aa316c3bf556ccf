#include "krc/tableau.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace krc {

namespace {

void require_shape(int n, int k, int l) {
    if (n < 2) throw std::invalid_argument("alphabet size must be at least 2, got n=" + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("row count must satisfy 1 <= k <= n-1, got k=" + std::to_string(k) +
                                    " with n=" + std::to_string(n));
    if (l < 1) throw std::invalid_argument("column count must be positive, got l=" + std::to_string(l));
}

} /* namespace */

RectTableau classical_highest(int n, int k, int l) {
    require_shape(n, k, l);
    RectTableau t{n, k, l, std::vector<int>(static_cast<size_t>(k) * l)};
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < l; ++c) t.at(r, c) = r + 1;
    return t;
}

bool is_semistandard(const RectTableau& t) {
    if (t.n < 2 || t.rows < 1 || t.rows > t.n - 1 || t.cols < 1) return false;
    if (t.cells.size() != static_cast<size_t>(t.rows) * t.cols) return false;
    for (int v : t.cells)
        if (v < 1 || v > t.n) return false;
    for (int r = 0; r < t.rows; ++r)
        for (int c = 1; c < t.cols; ++c)
            if (t.at(r, c - 1) > t.at(r, c)) return false;
    for (int c = 0; c < t.cols; ++c)
        for (int r = 1; r < t.rows; ++r)
            if (t.at(r - 1, c) >= t.at(r, c)) return false;
    return true;
}

void require_valid(const RectTableau& t) {
    require_shape(t.n, t.rows, t.cols);
    if (t.cells.size() != static_cast<size_t>(t.rows) * t.cols)
        throw std::invalid_argument("cell count does not match the declared shape");
    for (int v : t.cells)
        if (v < 1 || v > t.n)
            throw std::invalid_argument("letter " + std::to_string(v) + " outside {1.." + std::to_string(t.n) + "}");
    for (int r = 0; r < t.rows; ++r)
        for (int c = 1; c < t.cols; ++c)
            if (t.at(r, c - 1) > t.at(r, c))
                throw std::invalid_argument("row " + std::to_string(r + 1) + " not weakly increasing");
    for (int c = 0; c < t.cols; ++c)
        for (int r = 1; r < t.rows; ++r)
            if (t.at(r - 1, c) >= t.at(r, c))
                throw std::invalid_argument("column " + std::to_string(c + 1) + " not strictly increasing");
}

std::vector<int> content(const RectTableau& t) {
    std::vector<int> m(static_cast<size_t>(t.n), 0);
    for (int v : t.cells) ++m[static_cast<size_t>(v - 1)];
    return m;
}

std::vector<int> crystal_word(const RectTableau& t) {
    std::vector<int> w;
    w.reserve(t.cells.size());
    for (int c = 0; c < t.cols; ++c)
        for (int r = t.rows - 1; r >= 0; --r) w.push_back(t.at(r, c));
    return w;
}

std::vector<int> row_word(const RectTableau& t) {
    std::vector<int> w;
    w.reserve(t.cells.size());
    for (int r = t.rows - 1; r >= 0; --r)
        for (int c = 0; c < t.cols; ++c) w.push_back(t.at(r, c));
    return w;
}

RectTableau dual(const RectTableau& t) {
    const int n = t.n;
    RectTableau d{n, n - t.rows, t.cols, std::vector<int>(static_cast<size_t>(n - t.rows) * t.cols)};
    std::vector<char> present(static_cast<size_t>(n) + 1);
    for (int c = 0; c < t.cols; ++c) {
        std::fill(present.begin(), present.end(), 0);
        for (int r = 0; r < t.rows; ++r) present[static_cast<size_t>(t.at(r, c))] = 1;
        int dr = 0;
        for (int v = 1; v <= n; ++v)
            if (!present[static_cast<size_t>(v)]) d.at(dr++, t.cols - 1 - c) = v;
    }
    return d;
}

std::vector<RectTableau> enumerate_crystal(int n, int k, int l) {
    require_shape(n, k, l);
    std::vector<RectTableau> out;
    RectTableau t{n, k, l, std::vector<int>(static_cast<size_t>(k) * l)};
    const int total = k * l;
    auto fill = [&](auto&& self, int pos) -> void {
        if (pos == total) {
            out.push_back(t);
            return;
        }
        const int r = pos / l, c = pos % l;
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.at(r, c - 1));
        if (r > 0) lo = std::max(lo, t.at(r - 1, c) + 1);
        const int hi = n - (k - 1 - r); /* room for a strictly increasing tail below */
        for (int v = lo; v <= hi; ++v) {
            t.at(r, c) = v;
            self(self, pos + 1);
        }
    };
    fill(fill, 0);

    std::vector<std::vector<int>> words(out.size());
    for (size_t i = 0; i < out.size(); ++i) words[i] = row_word(out[i]);
    std::vector<size_t> order(out.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return words[a] < words[b]; });
    std::vector<RectTableau> sorted;
    sorted.reserve(out.size());
    for (size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

int64_t crystal_size(int n, int k, int l) {
    require_shape(n, k, l);
    /* count of k x l rectangles over {1..n}: prod_{i=1..k, j=1..l} (n+j-i)/(k+j-i) */
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= l; ++j) {
            num *= n + j - i;
            den *= k + j - i;
        }
    }
    const boost::multiprecision::cpp_int size = num / den;
    if (size > std::numeric_limits<int64_t>::max()) throw std::overflow_error("crystal_size does not fit in 64 bits");
    return static_cast<int64_t>(size);
}

std::string to_text(const RectTableau& t) {
    std::string s;
    for (int r = 0; r < t.rows; ++r) {
        if (r) s += '/';
        for (int c = 0; c < t.cols; ++c) {
            if (c) s += ',';
            s += std::to_string(t.at(r, c));
        }
    }
    return s;
}

namespace {

int parse_cell(const std::string& tok) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty cell in tableau text");
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data() + b, tok.data() + e + 1, value);
    if (ec != std::errc{} || p != tok.data() + e + 1)
        throw std::invalid_argument("bad cell '" + tok + "' in tableau text");
    return value;
}

} /* namespace */

RectTableau rect_from_text(int n, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream line(text);
    std::string row;
    while (std::getline(line, row, '/')) {
        std::vector<int> cells;
        std::istringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) cells.push_back(parse_cell(tok));
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw std::invalid_argument("empty tableau text");
    const int k = static_cast<int>(rows.size());
    const int l = static_cast<int>(rows[0].size());
    RectTableau t{n, k, l, {}};
    t.cells.reserve(static_cast<size_t>(k) * l);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != l)
            throw std::invalid_argument("ragged rows in tableau text '" + text + "'");
        t.cells.insert(t.cells.end(), r.begin(), r.end());
    }
    require_valid(t);
    return t;
}

} /* namespace krc */
