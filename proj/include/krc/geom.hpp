#pragma once

#include "krc/report.hpp"
#include "krc/semifield.hpp"
#include "krc/tableau.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/*
 * Subtraction-free birational maps on rational-rectangle coordinates
 * and their tropical counterparts.
 *
 * VecPoint carries the n coordinates of a one-row point; its s is
 * implicit as the product of the entries.  GeomPoint carries the free
 * coordinates x_{ij}, (i,j) in R_k = {1 <= i <= k, i <= j <= i+n-k-1},
 * plus s; the boundary coordinate x_{i,i+n-k} is derived as s divided
 * by the product of row i's free coordinates.
 *
 * geom_r_top is the (n-1,1)-type R: on (X^vee, s) x (Y, t), with X
 * stored pre-dual, it returns (Y~, t) x (X~^vee, s) via
 *   P_i = x_i + y_i,   x~_i = x_i P_{i+1} / P_i,   y~_i = y_i P_{i+1} / P_i
 * with indices mod n.  geom_k1 is the cyclic left shift (the pre-dual
 * of the one-row K image).  geom_k2_n5 is the n=5, k=2 K-matrix in
 * coordinates, returning the pre-dual image point with s unchanged.
 *
 * tableau_to_tropical / tropical_to_tableau translate between tableaux
 * and tropical points: x_{ij} counts letter j in row i and s = l.
 */

namespace krc {

template <Semifield S>
struct VecPoint {
    int n = 0;
    std::vector<S> x;

    bool operator==(const VecPoint&) const = default;
};

template <Semifield S>
struct GeomPoint {
    int n = 0;
    int k = 0;
    std::map<std::pair<int, int>, S> x;
    S s{};

    bool operator==(const GeomPoint&) const = default;
};

inline bool in_free_range(int n, int k, int i, int j) { return 1 <= i && i <= k && i <= j && j <= i + n - k - 1; }

template <Semifield S>
void require_point(const GeomPoint<S>& p) {
    if (p.n < 2 || p.k < 1 || p.k >= p.n)
        throw std::invalid_argument("geometric point needs 1 <= k < n, got k=" + std::to_string(p.k) +
                                    ", n=" + std::to_string(p.n));
    size_t expected = 0;
    for (int i = 1; i <= p.k; ++i)
        for (int j = i; j <= i + p.n - p.k - 1; ++j) {
            if (!p.x.count({i, j}))
                throw std::invalid_argument("geometric point is missing coordinate " + std::to_string(i) + "," +
                                            std::to_string(j));
            ++expected;
        }
    if (p.x.size() != expected)
        throw std::invalid_argument("geometric point carries a coordinate outside the free range");
}

/* x_{i,i+n-k} = s / prod_{j=i}^{i+n-k-1} x_{ij} */
template <Semifield S>
S derived_coord(const GeomPoint<S>& p, int i) {
    S prod = p.x.at({i, i});
    for (int j = i + 1; j <= i + p.n - p.k - 1; ++j) prod = prod * p.x.at({i, j});
    return p.s / prod;
}

template <Semifield S>
std::pair<VecPoint<S>, VecPoint<S>> geom_r_top(const VecPoint<S>& x, const VecPoint<S>& y) {
    if (x.n != y.n || static_cast<int>(x.x.size()) != x.n || static_cast<int>(y.x.size()) != y.n)
        throw std::invalid_argument("geom_r_top: mismatched vector points");
    const size_t n = x.x.size();
    std::vector<S> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = x.x[i] + y.x[i];
    VecPoint<S> xt{x.n, std::vector<S>(n)}, yt{y.n, std::vector<S>(n)};
    for (size_t i = 0; i < n; ++i) {
        const S& ratio = p[(i + 1) % n];
        xt.x[i] = x.x[i] * ratio / p[i];
        yt.x[i] = y.x[i] * ratio / p[i];
    }
    return {std::move(yt), std::move(xt)};
}

template <Semifield S>
VecPoint<S> geom_k1(const VecPoint<S>& x) {
    if (static_cast<int>(x.x.size()) != x.n) throw std::invalid_argument("geom_k1: malformed vector point");
    VecPoint<S> out{x.n, std::vector<S>(x.x.size())};
    for (size_t i = 0; i < x.x.size(); ++i) out.x[i] = x.x[(i + 1) % x.x.size()];
    return out;
}

template <Semifield S>
GeomPoint<S> geom_k2_n5(const GeomPoint<S>& p) {
    if (p.n != 5 || p.k != 2) throw std::invalid_argument("geom_k2_n5: point must have n=5, k=2");
    require_point(p);
    const S& x11 = p.x.at({1, 1});
    const S& x12 = p.x.at({1, 2});
    const S& x13 = p.x.at({1, 3});
    const S& x22 = p.x.at({2, 2});
    const S& x23 = p.x.at({2, 3});
    const S& x24 = p.x.at({2, 4});
    const S x14 = derived_coord(p, 1);
    const S x25 = derived_coord(p, 2);
    const S q1 = x13 + x24;
    const S q2 = x12 + x23;
    const S q3 = x12 * x13 + x12 * x24 + x23 * x24;

    GeomPoint<S> out;
    out.n = 5;
    out.k = 2;
    out.s = p.s;
    out.x[{1, 1}] = x12 * q1;
    out.x[{1, 2}] = x13 * x14 * x23 / (q1 * q2);
    out.x[{1, 3}] = x11 * q2 / (x22 * x23);
    out.x[{2, 2}] = q1;
    out.x[{2, 3}] = x14 * q3 / (q1 * q2);
    out.x[{2, 4}] = x25 / x14;
    return out;
}

GeomPoint<TropInt> tableau_to_tropical(const RectTableau& t);
RectTableau tropical_to_tableau(const GeomPoint<TropInt>& p);

inline constexpr uint64_t kDefaultSeed = 20250815;

VerifierReport verify_tropical_k(int l);
VerifierReport verify_tropical_r_top(int n, int l, int m);
VerifierReport verify_geom_reflection_n2(int samples, uint64_t seed = kDefaultSeed, int grid_radius = 3);
VerifierReport verify_positivity(const std::string& map_id, int samples, uint64_t seed = kDefaultSeed);

} /* namespace krc */
