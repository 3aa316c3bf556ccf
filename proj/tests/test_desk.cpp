#include "doctest.h"

#include "krc/desk.hpp"

#include <algorithm>
#include <string>

using namespace krc;

namespace {

DeskOptions smoke_options() {
    DeskOptions o;
    o.pair_bound = 150;
    o.triple_bound = 150;
    o.affine_bound = 60;
    o.crystal_bound = 20;
    o.corollary_bound = 20;
    o.oracle_bound = 30;
    o.max_l = 2;
    o.tropical_k_max_l = 1;
    o.tropical_r_max_n = 3;
    o.tropical_r_max_lm = 1;
    o.samples = 10;
    o.positivity_samples = 5;
    o.grid_radius = 1;
    return o;
}

bool has_label(const std::vector<VerifierReport>& reports, const std::string& label) {
    return std::any_of(reports.begin(), reports.end(), [&](const VerifierReport& r) { return r.label == label; });
}

} /* namespace */

TEST_SUITE("desk") {

TEST_CASE("shrunk battery passes and covers every block") {
    const auto reports = run_desk_suite(smoke_options());
    CHECK(all_pass(reports));
    CHECK(reports.size() > 100);

    CHECK(has_label(reports, "dual-compat n=2 B^{1,19}"));          /* |B| = 20 = cap */
    CHECK(has_label(reports, "promotion n=5 B^{2,1}"));
    CHECK(has_label(reports, "yang-baxter n=3 B^{1,1} (x) B^{1,2} (x) B^{2,1}"));
    CHECK(has_label(reports, "reflection n=5 B^{1,2} (x) B^{2,1}")); /* the 150-element case */
    CHECK(has_label(reports, "dual-prop n=4 B^{1,1} (x) B^{2,2}"));
    CHECK(has_label(reports, "inversion n=2 B^{1,2} (x) B^{1,1}"));
    CHECK(has_label(reports, "connectivity n=3 B^{1,1} B^{1,1}"));
    CHECK(has_label(reports, "r-identity n=4 B^{2,1} (x) B^{2,1}"));
    CHECK(has_label(reports, "oracle agreement n=2 B^{1,2} (x) B^{1,2}"));
    CHECK(has_label(reports, "corollary-dual n=6 B^{3,1}"));
    CHECK(has_label(reports, "figure1 n=3 b=1 c=3"));
    CHECK(has_label(reports, "figure1 n=5 b=1,3 c=1/2"));
    CHECK(has_label(reports, "tropical-k n=5 B^{2,1}"));
    CHECK(has_label(reports, "tropical-r n=3 dual B^{1,1} (x) B^{1,1}"));
    CHECK(has_label(reports, "positivity k2n5 samples=5 seed=20250815"));
}

TEST_CASE("two runs produce identical reports") {
    const auto a = run_desk_suite(smoke_options());
    const auto b = run_desk_suite(smoke_options());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].label == b[i].label);
        CHECK(a[i].checked == b[i].checked);
        CHECK(a[i].failures == b[i].failures);
    }
}

} /* TEST_SUITE desk */
