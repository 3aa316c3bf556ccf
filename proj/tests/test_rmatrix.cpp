#include "doctest.h"

#include "krc/catalog.hpp"
#include "krc/crystal.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tableau.hpp"

#include <optional>
#include <vector>

using namespace krc;

namespace {

TensorElem pair_elem(const RectTableau& a, const RectTableau& b) { return TensorElem{{a, b}}; }

/* table-free energy recomputation: the BFS is hidden in the catalog, so
 * walk every raising edge semantically and test the defining increments.
 * On a pair, e_0 acts on the left factor iff eps_0(b1) > phi_0(b2). */
int e0_acting_factor(const TensorElem& x) { return eps(0, x.factors[0]) > phi(0, x.factors[1]) ? 0 : 1; }

int e0_delta(const TensorElem& x) {
    const int before = e0_acting_factor(x);
    const int after = e0_acting_factor(combinatorial_r(x));
    if (before == 0 && after == 0) return 1;
    if (before == 1 && after == 1) return -1;
    return 0;
}

} /* namespace */

TEST_SUITE("rmatrix") {

TEST_CASE("graph algorithm reproduces the pinned two-row times four-row image") {
    const auto b1 = rect_from_text(6, "1,3,4/2,6,6");
    const auto b2 = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    const TensorElem y = combinatorial_r(pair_elem(b1, b2));
    CHECK(y.factors[0] == rect_from_text(6, "1,2,2/2,3,3/4,5,5/6,6,6"));
    CHECK(y.factors[1] == rect_from_text(6, "1,1,3/4,4,5"));
}

TEST_CASE("plactic factorization reproduces the same image") {
    const auto b1 = rect_from_text(6, "1,3,4/2,6,6");
    const auto b2 = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    const TensorElem y = plactic_r(pair_elem(b1, b2));
    CHECK(y.factors[0] == rect_from_text(6, "1,2,2/2,3,3/4,5,5/6,6,6"));
    CHECK(y.factors[1] == rect_from_text(6, "1,1,3/4,4,5"));
}

TEST_CASE("the two algorithms agree on whole product spaces") {
    const std::vector<std::array<int, 5>> cases = {
        {3, 1, 2, 2, 1}, /* n, k1, l1, k2, l2 */
        {4, 2, 2, 1, 1},
        {2, 1, 3, 1, 2},
    };
    for (const auto& [n, k1, l1, k2, l2] : cases) {
        for (const auto& a : enumerate_crystal(n, k1, l1)) {
            for (const auto& b : enumerate_crystal(n, k2, l2)) {
                const TensorElem x = pair_elem(a, b);
                CHECK(combinatorial_r(x) == plactic_r(x));
            }
        }
    }
}

TEST_CASE("R on a pair of equal shapes is the identity") {
    for (const auto& a : enumerate_crystal(3, 1, 2)) {
        for (const auto& b : enumerate_crystal(3, 1, 2)) {
            const TensorElem x = pair_elem(a, b);
            CHECK(combinatorial_r(x) == x);
        }
    }
}

TEST_CASE("swapped R inverts R") {
    for (const auto& a : enumerate_crystal(3, 1, 1)) {
        for (const auto& b : enumerate_crystal(3, 2, 2)) {
            const TensorElem x = pair_elem(a, b);
            CHECK(combinatorial_r(combinatorial_r(x)) == x);
        }
    }
}

TEST_CASE("R commutes with every operator including index zero") {
    for (const auto& a : enumerate_crystal(3, 1, 1)) {
        for (const auto& b : enumerate_crystal(3, 2, 1)) {
            const TensorElem x = pair_elem(a, b);
            const TensorElem rx = combinatorial_r(x);
            for (int i = 0; i < 3; ++i) {
                CHECK(eps(i, x) == eps(i, rx));
                CHECK(phi(i, x) == phi(i, rx));
                const auto ex = apply_e(i, x);
                const auto erx = apply_e(i, rx);
                CHECK(ex.has_value() == erx.has_value());
                if (ex) CHECK(combinatorial_r(*ex) == *erx);
                const auto fx = apply_f(i, x);
                const auto frx = apply_f(i, rx);
                CHECK(fx.has_value() == frx.has_value());
                if (fx) CHECK(combinatorial_r(*fx) == *frx);
            }
        }
    }
}

TEST_CASE("energy anchor values for the smallest affine crystal") {
    const auto t1 = rect_from_text(2, "1");
    const auto t2 = rect_from_text(2, "2");
    CHECK(energy_h(pair_elem(t1, t1)) == 0);
    CHECK(energy_h(pair_elem(t1, t2)) == 0);
    CHECK(energy_h(pair_elem(t2, t2)) == 0);
    CHECK(energy_h(pair_elem(t2, t1)) == 1);
}

TEST_CASE("energy is constant on classical components and steps on zero edges") {
    const std::vector<std::array<int, 5>> cases = {
        {3, 1, 1, 1, 2},
        {4, 1, 1, 2, 1},
    };
    for (const auto& [n, k1, l1, k2, l2] : cases) {
        for (const auto& a : enumerate_crystal(n, k1, l1)) {
            for (const auto& b : enumerate_crystal(n, k2, l2)) {
                const TensorElem x = pair_elem(a, b);
                const int h = energy_h(x);
                for (int i = 1; i < n; ++i) {
                    if (const auto y = apply_e(i, x)) CHECK(energy_h(*y) == h);
                }
                if (const auto y = apply_e(0, x)) CHECK(energy_h(*y) == h + e0_delta(x));
            }
        }
    }
    const auto u1 = classical_highest(3, 1, 1);
    const auto u2 = classical_highest(3, 1, 2);
    CHECK(energy_h(pair_elem(u1, u2)) == 0);
}

TEST_CASE("pair tables match the reference algorithm elementwise") {
    Catalog& cat = Catalog::instance();
    const CrystalShape s1{3, 1, 2}, s2{3, 2, 1};
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const PairTables& p = cat.pair(s1, s2);
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            const TensorElem x = pair_elem(t1.elems[static_cast<size_t>(i1)], t2.elems[static_cast<size_t>(i2)]);
            const TensorElem y = combinatorial_r(x);
            const int32_t packed = p.r_image[static_cast<size_t>(i1 * t2.size() + i2)];
            CHECK(t2.elems[static_cast<size_t>(packed / t1.size())] == y.factors[0]);
            CHECK(t1.elems[static_cast<size_t>(packed % t1.size())] == y.factors[1]);
        }
    }
}

TEST_CASE("the generic product space agrees with the semantic fold on triples") {
    Catalog& cat = Catalog::instance();
    const ShapeTables& ta = cat.shape({3, 1, 1});
    const ShapeTables& tb = cat.shape({3, 2, 1});
    const ProductSpace space({&ta, &tb, &ta});
    for (int64_t idx = 0; idx < space.size(); ++idx) {
        const auto parts = space.decode(idx);
        CHECK(space.encode(parts) == idx);
        const TensorElem x{{ta.elems[static_cast<size_t>(parts[0])], tb.elems[static_cast<size_t>(parts[1])],
                            ta.elems[static_cast<size_t>(parts[2])]}};
        CHECK(space.is_classical_highest(idx) == is_classical_highest(x));
        CHECK(space.weight(idx) == weight(x));
        for (int i = 0; i < 3; ++i) {
            CHECK(space.eps(i, idx) == eps(i, x));
            CHECK(space.phi(i, idx) == phi(i, x));
            const auto ex = apply_e(i, x);
            const int64_t eidx = space.apply_e(i, idx);
            CHECK(ex.has_value() == (eidx >= 0));
            if (ex) {
                const auto eparts = space.decode(eidx);
                const TensorElem ecoded{{ta.elems[static_cast<size_t>(eparts[0])],
                                         tb.elems[static_cast<size_t>(eparts[1])],
                                         ta.elems[static_cast<size_t>(eparts[2])]}};
                CHECK(ecoded == *ex);
            }
            const auto fx = apply_f(i, x);
            const int64_t fidx = space.apply_f(i, idx);
            CHECK(fx.has_value() == (fidx >= 0));
            if (fx) {
                const auto fparts = space.decode(fidx);
                const TensorElem fcoded{{ta.elems[static_cast<size_t>(fparts[0])],
                                         tb.elems[static_cast<size_t>(fparts[1])],
                                         ta.elems[static_cast<size_t>(fparts[2])]}};
                CHECK(fcoded == *fx);
            }
        }
    }
}

TEST_CASE("affinized R shifts modes by the local energy") {
    const AffineElem a{0, rect_from_text(2, "2")};
    const AffineElem b{0, rect_from_text(2, "1")};
    const auto [c, d] = affine_r(a, b);
    CHECK(c == AffineElem{1, rect_from_text(2, "2")});
    CHECK(d == AffineElem{-1, rect_from_text(2, "1")});

    for (const auto& s : enumerate_crystal(3, 1, 1)) {
        for (const auto& t : enumerate_crystal(3, 2, 1)) {
            for (int d1 = -1; d1 <= 1; ++d1) {
                const auto [u, v] = affine_r(AffineElem{d1, s}, AffineElem{2, t});
                CHECK(u.d + v.d == d1 + 2);
                const TensorElem y = combinatorial_r(pair_elem(s, t));
                CHECK(u.t == y.factors[0]);
                CHECK(v.t == y.factors[1]);
            }
        }
    }
}

TEST_CASE("algorithm rejects non pair inputs") {
    const auto t = rect_from_text(2, "1");
    CHECK_THROWS_AS(combinatorial_r(TensorElem{{t, t, t}}), std::invalid_argument);
    CHECK_THROWS_AS(energy_h(TensorElem{{t}}), std::invalid_argument);
    CHECK_THROWS_AS(plactic_r(TensorElem{{t, t}}, 2), std::invalid_argument);
}

} /* TEST_SUITE rmatrix */
