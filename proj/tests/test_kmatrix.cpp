#include "doctest.h"

#include "krc/catalog.hpp"
#include "krc/crystal.hpp"
#include "krc/kmatrix.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace krc;

TEST_SUITE("kmatrix") {

TEST_CASE("pinned four-row image") {
    const auto b = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    CHECK(k_matrix(b) == rect_from_text(6, "1,1,3/4,4,5"));
}

TEST_CASE("pinned single column images") {
    CHECK(k_matrix(rect_from_text(5, "1/5")) == dual(rect_from_text(5, "3/4")));
    CHECK(k_matrix(rect_from_text(5, "2/3")) == dual(rect_from_text(5, "1/5")));
}

TEST_CASE("single cell images shift the letter down cyclically") {
    for (int i = 1; i <= 3; ++i) {
        RectTableau b{3, 1, 1, {i}};
        const int down = i == 1 ? 3 : i - 1;
        CHECK(k_matrix_one_row(b) == dual(RectTableau{3, 1, 1, {down}}));
    }
}

TEST_CASE("one-row closed form agrees with the generic construction") {
    for (int n = 2; n <= 4; ++n) {
        for (int l = 1; l <= 3; ++l) {
            for (const auto& b : enumerate_crystal(n, 1, l)) CHECK(k_matrix_one_row(b) == k_matrix(b));
        }
    }
}

TEST_CASE("one-row closed form rejects taller tableaux") {
    CHECK_THROWS_AS(k_matrix_one_row(rect_from_text(3, "1/2")), std::invalid_argument);
}

TEST_CASE("K is a bijection onto the dual crystal") {
    for (const auto& [n, k, l] : std::vector<std::array<int, 3>>{{4, 2, 1}, {3, 1, 2}, {5, 2, 1}}) {
        std::set<RectTableau> images;
        const auto elems = enumerate_crystal(n, k, l);
        for (const auto& b : elems) {
            const RectTableau kb = k_matrix(b);
            CHECK(shape_of(kb) == dual_shape(shape_of(b)));
            images.insert(kb);
        }
        CHECK(images.size() == elems.size());
    }
}

TEST_CASE("catalog K table matches the reference map") {
    Catalog& cat = Catalog::instance();
    for (const CrystalShape s : {CrystalShape{4, 2, 1}, CrystalShape{3, 1, 2}, CrystalShape{2, 1, 2}}) {
        const ShapeTables& tb = cat.shape(s);
        const ShapeTables& tv = cat.shape(dual_shape(s));
        const KTable& kt = cat.kmatrix(s);
        for (int32_t i = 0; i < tb.size(); ++i)
            CHECK(tv.elems[static_cast<size_t>(kt.image[static_cast<size_t>(i)])] ==
                  k_matrix(tb.elems[static_cast<size_t>(i)]));
    }
}

TEST_CASE("affinized K negates the mode and subtracts the boundary energy") {
    const AffineElem zb{0, rect_from_text(2, "1")};
    const AffineElem out = affine_k(zb);
    CHECK(out.t == rect_from_text(2, "1")); /* self dual shape, R = id */
    CHECK(out.d == -1);                     /* H([2] (x) [1]) = 1 */

    for (const auto& b : enumerate_crystal(3, 1, 2)) {
        for (int d = -1; d <= 1; ++d) {
            const AffineElem img = affine_k(AffineElem{d, b});
            CHECK(img.t == k_matrix(b));
            CHECK(img.d == -d - energy_h(TensorElem{{dual(b), b}}));
        }
    }
}

} /* TEST_SUITE kmatrix */
