#pragma once

/*
 * Desk-scale verification battery: one call sweeps every identity over
 * the default test matrix and returns the individual reports in a fixed,
 * deterministic order.  The matrix is
 *
 *   shapes      B^{k,l} for n in 2..5, 1 <= k <= n-1, l <= max_l
 *   pairs       ordered shape pairs with |B1 (x) B2| <= pair_bound
 *   triples     ordered triples from {B^{1,1}, B^{1,2}, B^{2,1}}
 *   single-B    every B^{k,l} with |B| <= crystal_bound (any l), plus the
 *               n=6 pair B^{4,3}, B^{2,3} for the duality sweep
 *   affine      pairs/triples rechecked with modes, product <= affine_bound
 *   oracle      pairs with |B1|*|B2| <= oracle_bound, graph R vs plactic R
 *   geometric   tropical K for l <= tropical_k_max_l, tropical one-row R,
 *               the n=2 reflection chain on rational samples plus the
 *               integer grid, and positivity for all three maps
 */

#include "krc/geom.hpp"
#include "krc/report.hpp"

#include <cstdint>
#include <vector>

namespace krc {

struct DeskOptions {
    int64_t pair_bound = 10000;
    int64_t triple_bound = 10000;
    int64_t affine_bound = 2000;
    int64_t crystal_bound = 500;   /* dual-compat and promotion sweeps */
    int64_t corollary_bound = 600; /* K well-definedness sweep, n <= 6 */
    int64_t oracle_bound = 400;
    int max_l = 6;
    int tropical_k_max_l = 3;
    int tropical_r_max_n = 4;
    int tropical_r_max_lm = 2;
    int64_t samples = 1000;        /* rational samples for the n=2 chain */
    int64_t positivity_samples = 100;
    uint64_t seed = kDefaultSeed;
    int grid_radius = 3;
};

std::vector<VerifierReport> run_desk_suite(const DeskOptions& options = {});

bool all_pass(const std::vector<VerifierReport>& reports);

} /* namespace krc */
