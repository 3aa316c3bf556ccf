#include "doctest.h"

#include "krc/plactic.hpp"
#include "krc/promotion.hpp"
#include "krc/tableau.hpp"

#include <array>
#include <stdexcept>

using namespace krc;

TEST_SUITE("tableau") {

TEST_CASE("classical highest element and text form") {
    RectTableau u = classical_highest(4, 2, 3);
    CHECK(to_text(u) == "1,1,1/2,2,2");
    CHECK(is_semistandard(u));
    CHECK(content(u) == std::vector<int>{3, 3, 0, 0});
}

TEST_CASE("shape restrictions are enforced") {
    CHECK_THROWS_AS(classical_highest(4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(classical_highest(4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(classical_highest(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(classical_highest(4, 2, 0), std::invalid_argument);
}

TEST_CASE("validity checks") {
    CHECK_THROWS_AS(rect_from_text(4, "1,3/2,2"), std::invalid_argument);  /* row 2<3 above 2 is fine, col 2 has 3>=2? -> column 2 not strict */
    CHECK_THROWS_AS(rect_from_text(4, "2,1"), std::invalid_argument);      /* row not weakly increasing */
    CHECK_THROWS_AS(rect_from_text(4, "1,5"), std::invalid_argument);      /* letter outside alphabet */
    CHECK_THROWS_AS(rect_from_text(4, "1,2/3"), std::invalid_argument);    /* ragged */
    CHECK_THROWS_AS(rect_from_text(4, "1,,2"), std::invalid_argument);     /* empty cell */
    CHECK_THROWS_AS(rect_from_text(4, "1,2/2,3/3,4/4,4"), std::invalid_argument); /* k = n */
    CHECK(is_semistandard(rect_from_text(4, "1,2,2/3,3,4")));
}

TEST_CASE("reading words") {
    RectTableau t = rect_from_text(4, "1,2,2/3,3,4");
    CHECK(crystal_word(t) == std::vector<int>{3, 1, 3, 2, 4, 2});
    CHECK(row_word(t) == std::vector<int>{3, 3, 4, 1, 2, 2});
    CHECK(content(t) == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("text round trip and whitespace tolerance") {
    RectTableau t = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    CHECK(rect_from_text(6, to_text(t)) == t);
    CHECK(rect_from_text(4, " 1 , 2 / 3 , 4 ") == rect_from_text(4, "1,2/3,4"));
}

TEST_CASE("dual fixture and involution") {
    RectTableau t = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    RectTableau d = dual(t);
    CHECK(to_text(d) == "1,3,4/2,6,6");
    CHECK(d.rows == 2);
    CHECK(dual(d) == t);

    for (const RectTableau& b : enumerate_crystal(4, 2, 2)) {
        RectTableau bd = dual(b);
        CHECK(is_semistandard(bd));
        CHECK(dual(bd) == b);
    }
}

TEST_CASE("enumeration counts match closed forms") {
    /* one row: multisets; one column: subsets */
    CHECK(enumerate_crystal(4, 1, 2).size() == 10);
    CHECK(enumerate_crystal(4, 2, 1).size() == 6);
    CHECK(enumerate_crystal(3, 2, 2).size() == 6);
    CHECK(enumerate_crystal(2, 1, 5).size() == 6);
}

TEST_CASE("enumeration is sorted by row word") {
    auto cols = enumerate_crystal(3, 2, 1);
    REQUIRE(cols.size() == 3);
    CHECK(to_text(cols[0]) == "1/2");
    CHECK(to_text(cols[1]) == "1/3");
    CHECK(to_text(cols[2]) == "2/3");
    for (size_t i = 1; i < cols.size(); ++i) CHECK(row_word(cols[i - 1]) < row_word(cols[i]));
}

TEST_CASE("enumeration equals the validate filter on tiny shapes") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k < n && k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                size_t brute = 0;
                const int cells = k * l;
                std::vector<int> grid(static_cast<size_t>(cells), 1);
                while (true) {
                    RectTableau t{n, k, l, grid};
                    if (is_semistandard(t)) ++brute;
                    int p = cells - 1;
                    while (p >= 0 && grid[static_cast<size_t>(p)] == n) grid[static_cast<size_t>(p--)] = 1;
                    if (p < 0) break;
                    ++grid[static_cast<size_t>(p)];
                }
                CHECK(enumerate_crystal(n, k, l).size() == brute);
            }
}

TEST_CASE("row insertion fixtures") {
    GeneralTableau g = from_rect(rect_from_text(6, "1,3,4/2,6,6"));
    CHECK(row_insert(g, 5).rows == std::vector<std::vector<int>>{{1, 3, 4, 5}, {2, 6, 6}});
    GeneralTableau empty{6, {}};
    CHECK(row_insert(empty, 1).rows == std::vector<std::vector<int>>{{1}});
    CHECK_THROWS_AS(row_insert(empty, 7), std::invalid_argument);
}

TEST_CASE("general tableau validation") {
    CHECK(validate(from_rect(rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6"))));
    CHECK_FALSE(validate(GeneralTableau{6, {{1, 1}, {1, 2}}}));   /* column not strict */
    CHECK_FALSE(validate(GeneralTableau{3, {{1, 2}, {2, 3}, {3, 4}}})); /* letter 4 > n */
    CHECK_FALSE(validate(GeneralTableau{3, {{1}, {2, 3}}}));      /* shape not a partition */
}

TEST_CASE("plactic product reproduces the five-row example") {
    RectTableau b1 = rect_from_text(6, "1,3,4/2,6,6");
    RectTableau b2 = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    GeneralTableau p = plactic_product(b1, b2);
    CHECK(p.rows == std::vector<std::vector<int>>{
                        {1, 1, 1, 3, 4, 5}, {2, 2, 2, 4}, {3, 3, 5}, {4, 5, 6}, {6, 6}});
    CHECK(validate(p));
    std::vector<int> want = content(b1);
    std::vector<int> add = content(b2);
    for (size_t j = 0; j < want.size(); ++j) want[j] += add[j];
    CHECK(general_content(p) == want);
}

TEST_CASE("plactic product with the empty word is the identity") {
    GeneralTableau a = from_rect(rect_from_text(4, "1,2/2,3"));
    CHECK(plactic_product(a, std::vector<int>{}) == a);
}

TEST_CASE("plactic product is associative on small triples") {
    auto a_list = enumerate_crystal(3, 1, 1);
    auto b_list = enumerate_crystal(3, 2, 1);
    auto c_list = enumerate_crystal(3, 1, 2);
    for (const auto& a : a_list)
        for (const auto& b : b_list)
            for (const auto& c : c_list) {
                GeneralTableau ab_c = plactic_product(plactic_product(a, b), c);
                GeneralTableau bc = plactic_product(b, c);
                GeneralTableau a_bc = plactic_product(from_rect(a), row_word(bc));
                CHECK(ab_c == a_bc);
            }
}

TEST_CASE("one-row promotion fixture") {
    RectTableau t = rect_from_text(4, "1,2,3,3,4");
    CHECK(to_text(promotion(t)) == "1,2,3,4,4");
    CHECK(promotion_inverse(promotion(t)) == t);
}

TEST_CASE("promotion on the four-row example") {
    RectTableau b = rect_from_text(6, "1,1,3/2,2,4/3,4,5/5,5,6");
    RectTableau pr = promotion(b);
    CHECK(to_text(pr) == "1,2,2/3,3,4/4,5,5/6,6,6");
    CHECK(promotion_inverse(pr) == b);

    std::vector<int> before = content(b);
    std::vector<int> after = content(pr);
    for (int j = 0; j < 6; ++j) CHECK(after[static_cast<size_t>((j + 1) % 6)] == before[static_cast<size_t>(j)]);
}

TEST_CASE("promotion laws on whole crystals") {
    const std::array<std::array<int, 3>, 4> shapes{{{4, 2, 1}, {4, 2, 2}, {3, 1, 3}, {5, 3, 2}}};
    for (auto [n, k, l] : shapes) {
        auto all = enumerate_crystal(n, k, l);
        for (const RectTableau& b : all) {
            RectTableau cur = b;
            for (int step = 0; step < n; ++step) {
                RectTableau next = promotion(cur);
                CHECK(promotion_inverse(next) == cur);
                std::vector<int> before = content(cur);
                std::vector<int> after = content(next);
                for (int j = 0; j < n; ++j)
                    CHECK(after[static_cast<size_t>((j + 1) % n)] == before[static_cast<size_t>(j)]);
                cur = next;
            }
            CHECK(cur == b);
        }
    }
}

} /* TEST_SUITE tableau */
