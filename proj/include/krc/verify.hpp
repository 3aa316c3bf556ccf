#pragma once

#include "krc/crystal.hpp"
#include "krc/report.hpp"
#include "krc/tableau.hpp"

#include <cstdint>
#include <vector>

/*
 * Equation verifiers.  Each sweeps a whole product space, working on
 * catalog indices rather than tableaux, and reports every
 * counterexample together with its full intermediate chain.  Bounds
 * are hard preconditions: exceeding one throws std::invalid_argument
 * instead of silently truncating the sweep.
 *
 * The identities:
 *   yang-baxter     (R23 (x) 1)(1 (x) R13)(R12 (x) 1)
 *                     = (1 (x) R12)(R13 (x) 1)(1 (x) R23)
 *   reflection      R(K (x) 1)R(K (x) 1) = (K (x) 1)R(K (x) 1)R,
 *                   both sides landing in B1^vee (x) B2^vee
 *   affine variants the same identities with modes z^d tracked
 *   dual-prop       R(b1 (x) b2) = c2 (x) c1  implies
 *                   R(b2^vee (x) b1^vee) = c1^vee (x) c2^vee
 *   corollary-dual  R(b^vee (x) b) = c (x) c^vee
 *   figure1         the six-R staircase: equal final 4-tuples, mirror
 *                   self-duality at every aligned stage, and the last
 *                   two slots reproducing both reflection sides
 *   inversion       R_{B2,B1} after R_{B1,B2} is the identity (and
 *                   R_{B,B} itself is, on equal shapes)
 *   r-identity      R_{B,B} = id elementwise
 *   oracle          graph-computed R equals the plactic-factorization R
 *   connectivity    one orbit under all e_i/f_i, i = 0..n-1
 *   dual-compat     e_i(b^vee) = (f_i b)^vee for every i
 *   promotion       pr^n = id, content rotation, inverse round trip
 */

namespace krc {

inline constexpr int64_t kPairBound = 10000;
inline constexpr int64_t kTripleBound = 10000;
inline constexpr int64_t kAffineBound = 2000;
inline constexpr int64_t kCrystalBound = 600;

VerifierReport verify_yang_baxter(CrystalShape s1, CrystalShape s2, CrystalShape s3, int64_t bound = kTripleBound);
VerifierReport verify_reflection(CrystalShape s1, CrystalShape s2, int64_t bound = kPairBound);
VerifierReport verify_affine_yang_baxter(CrystalShape s1, CrystalShape s2, CrystalShape s3, int dmin = -1,
                                         int dmax = 1, int64_t bound = kAffineBound);
VerifierReport verify_affine_reflection(CrystalShape s1, CrystalShape s2, int dmin = -1, int dmax = 1,
                                        int64_t bound = kAffineBound);
VerifierReport verify_dual_prop(CrystalShape s1, CrystalShape s2, int64_t bound = kPairBound);
VerifierReport verify_corollary_dual(CrystalShape s, int64_t bound = kPairBound);
VerifierReport verify_figure1(const RectTableau& b, const RectTableau& c);
VerifierReport verify_inversion(CrystalShape s1, CrystalShape s2, int64_t bound = kPairBound);
VerifierReport verify_r_identity(CrystalShape s, int64_t bound = kPairBound);
VerifierReport verify_oracle(CrystalShape s1, CrystalShape s2, int64_t bound = 400);
VerifierReport verify_connectivity(const std::vector<CrystalShape>& shapes, int64_t bound = kTripleBound,
                                   bool classical_only = false);
VerifierReport verify_dual_compat(CrystalShape s, int64_t bound = kCrystalBound);
VerifierReport verify_promotion(CrystalShape s, int64_t bound = kCrystalBound);

bool connectivity_check(const std::vector<CrystalShape>& shapes, int64_t bound = kTripleBound);

} /* namespace krc */
