#include "krc/desk.hpp"

#include "krc/tableau.hpp"
#include "krc/verify.hpp"

#include <string>

namespace krc {

namespace {

constexpr int kMinN = 2;
constexpr int kMaxN = 5;

/* shapes with l capped, the pair/triple universe */
std::vector<CrystalShape> capped_shapes(int n, int max_l) {
    std::vector<CrystalShape> out;
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; l <= max_l; ++l) out.push_back({n, k, l});
    return out;
}

/* shapes with |B| capped and l free; growth in l makes the list finite */
std::vector<CrystalShape> bounded_shapes(int n, int64_t size_cap) {
    std::vector<CrystalShape> out;
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; crystal_size(n, k, l) <= size_cap; ++l) out.push_back({n, k, l});
    return out;
}

int64_t size_of(CrystalShape s) { return crystal_size(s.n, s.k, s.l); }

} /* namespace */

std::vector<VerifierReport> run_desk_suite(const DeskOptions& o) {
    std::vector<VerifierReport> out;

    /* single-crystal laws: operator duality and promotion */
    for (int n = kMinN; n <= kMaxN; ++n) {
        for (const CrystalShape s : bounded_shapes(n, o.crystal_bound)) {
            out.push_back(verify_dual_compat(s, o.crystal_bound));
            out.push_back(verify_promotion(s, o.crystal_bound));
        }
    }
    for (const CrystalShape s : {CrystalShape{6, 4, 3}, CrystalShape{6, 2, 3}})
        if (size_of(s) <= o.crystal_bound) out.push_back(verify_dual_compat(s, o.crystal_bound));

    /* Yang-Baxter triples */
    for (int n = kMinN; n <= kMaxN; ++n) {
        std::vector<CrystalShape> triple_universe;
        for (const auto [k, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}})
            if (k <= n - 1) triple_universe.push_back({n, k, l});
        for (const CrystalShape s1 : triple_universe) {
            for (const CrystalShape s2 : triple_universe) {
                for (const CrystalShape s3 : triple_universe) {
                    const int64_t product = size_of(s1) * size_of(s2) * size_of(s3);
                    if (product <= o.triple_bound) out.push_back(verify_yang_baxter(s1, s2, s3, o.triple_bound));
                    if (product <= o.affine_bound)
                        out.push_back(verify_affine_yang_baxter(s1, s2, s3, -1, 1, o.affine_bound));
                }
            }
        }
    }

    /* pair identities over the capped shape universe */
    for (int n = kMinN; n <= kMaxN; ++n) {
        const auto universe = capped_shapes(n, o.max_l);
        for (const CrystalShape s1 : universe) {
            for (const CrystalShape s2 : universe) {
                const int64_t product = size_of(s1) * size_of(s2);
                if (product <= o.pair_bound) {
                    out.push_back(verify_reflection(s1, s2, o.pair_bound));
                    out.push_back(verify_dual_prop(s1, s2, o.pair_bound));
                    out.push_back(verify_inversion(s1, s2, o.pair_bound));
                    out.push_back(verify_connectivity({s1, s2}, o.pair_bound));
                }
                if (product <= o.affine_bound) out.push_back(verify_affine_reflection(s1, s2, -1, 1, o.affine_bound));
                if (product <= o.oracle_bound) out.push_back(verify_oracle(s1, s2, o.oracle_bound));
            }
            if (size_of(s1) * size_of(s1) <= o.pair_bound) out.push_back(verify_r_identity(s1, o.pair_bound));
        }
    }

    /* K well-definedness, n up to 6; the verifier sweeps B^vee (x) B */
    for (int n = kMinN; n <= 6; ++n)
        for (const CrystalShape s : capped_shapes(n, o.max_l))
            if (size_of(s) <= o.corollary_bound)
                out.push_back(verify_corollary_dual(s, o.corollary_bound * o.corollary_bound));

    /* six-R staircase */
    for (const auto& b : enumerate_crystal(3, 1, 1))
        for (const auto& c : enumerate_crystal(3, 1, 1)) out.push_back(verify_figure1(b, c));
    out.push_back(verify_figure1(rect_from_text(5, "1,3"), rect_from_text(5, "1/2")));

    /* geometric and tropical layer */
    for (int l = 1; l <= o.tropical_k_max_l; ++l) out.push_back(verify_tropical_k(l));
    for (int n = kMinN; n <= o.tropical_r_max_n; ++n)
        for (int l = 1; l <= o.tropical_r_max_lm; ++l)
            for (int m = 1; m <= o.tropical_r_max_lm; ++m) out.push_back(verify_tropical_r_top(n, l, m));
    out.push_back(verify_geom_reflection_n2(o.samples, o.seed, o.grid_radius));
    for (const char* map_id : {"r-top", "k1", "k2n5"})
        out.push_back(verify_positivity(map_id, o.positivity_samples, o.seed));

    return out;
}

bool all_pass(const std::vector<VerifierReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

} /* namespace krc */
