#include "krc/verify.hpp"

#include "krc/catalog.hpp"
#include "krc/kmatrix.hpp"
#include "krc/promotion.hpp"
#include "krc/rmatrix.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <string>

namespace krc {

namespace {

constexpr size_t kMaxStoredFailures = 25;

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string shape_text(const CrystalShape& s) { return "B^{" + std::to_string(s.k) + "," + std::to_string(s.l) + "}"; }

void push_failure(VerifierReport& rep, size_t& dropped, std::string msg) {
    if (rep.failures.size() < kMaxStoredFailures)
        rep.failures.push_back(std::move(msg));
    else
        ++dropped;
}

void seal(VerifierReport& rep, size_t dropped, const Stopwatch& sw) {
    if (dropped > 0) rep.failures.push_back("... " + std::to_string(dropped) + " further counterexamples suppressed");
    rep.millis = sw.millis();
}

void require_bound(const char* who, int64_t total, int64_t bound) {
    if (total > bound)
        throw std::invalid_argument(std::string(who) + ": product size " + std::to_string(total) + " exceeds bound " +
                                    std::to_string(bound));
}

/* indexed slot chains; one slot per tensor factor */
struct Slot {
    const ShapeTables* t;
    int32_t idx;

    bool operator==(const Slot& o) const { return t->shape == o.t->shape && idx == o.idx; }
};

std::string slots_text(const std::vector<Slot>& w) {
    std::string out;
    for (size_t m = 0; m < w.size(); ++m) {
        if (m) out += '|';
        out += to_text(w[m].t->elems[static_cast<size_t>(w[m].idx)]);
    }
    return out;
}

void apply_r_at(Catalog& cat, std::vector<Slot>& w, size_t pos) {
    const ShapeTables* ta = w[pos].t;
    const ShapeTables* tb = w[pos + 1].t;
    const PairTables& p = cat.pair(ta->shape, tb->shape);
    const int32_t packed =
        p.r_image[static_cast<size_t>(static_cast<int64_t>(w[pos].idx) * tb->size() + w[pos + 1].idx)];
    w[pos] = Slot{tb, packed / ta->size()};
    w[pos + 1] = Slot{ta, packed % ta->size()};
}

void apply_k_at(Catalog& cat, std::vector<Slot>& w, size_t pos) {
    const ShapeTables* tb = w[pos].t;
    const KTable& kt = cat.kmatrix(tb->shape);
    w[pos] = Slot{&cat.shape(dual_shape(tb->shape)), kt.image[static_cast<size_t>(w[pos].idx)]};
}

/* affinized slots: z^d carried alongside the index */
struct ASlot {
    const ShapeTables* t;
    int32_t idx;
    int d;

    bool operator==(const ASlot& o) const { return t->shape == o.t->shape && idx == o.idx && d == o.d; }
};

std::string aslots_text(const std::vector<ASlot>& w) {
    std::string out;
    for (size_t m = 0; m < w.size(); ++m) {
        if (m) out += '|';
        out += "z^" + std::to_string(w[m].d) + " " + to_text(w[m].t->elems[static_cast<size_t>(w[m].idx)]);
    }
    return out;
}

void apply_affine_r_at(Catalog& cat, std::vector<ASlot>& w, size_t pos) {
    const ShapeTables* ta = w[pos].t;
    const ShapeTables* tb = w[pos + 1].t;
    const PairTables& p = cat.pair(ta->shape, tb->shape);
    const size_t off = static_cast<size_t>(static_cast<int64_t>(w[pos].idx) * tb->size() + w[pos + 1].idx);
    const int h = p.energy[off];
    const int32_t packed = p.r_image[off];
    const int d1 = w[pos].d, d2 = w[pos + 1].d;
    w[pos] = ASlot{tb, packed / ta->size(), d2 + h};
    w[pos + 1] = ASlot{ta, packed % ta->size(), d1 - h};
}

void apply_affine_k_at(Catalog& cat, std::vector<ASlot>& w, size_t pos) {
    const ShapeTables* tb = w[pos].t;
    const ShapeTables& tv = cat.shape(dual_shape(tb->shape));
    const std::vector<int32_t>& dm = cat.dual_map(tb->shape);
    const PairTables& p = cat.pair(tv.shape, tb->shape);
    const int h = p.energy[static_cast<size_t>(
        static_cast<int64_t>(dm[static_cast<size_t>(w[pos].idx)]) * tb->size() + w[pos].idx)];
    const KTable& kt = cat.kmatrix(tb->shape);
    w[pos] = ASlot{&tv, kt.image[static_cast<size_t>(w[pos].idx)], -w[pos].d - h};
}

} /* namespace */

VerifierReport verify_yang_baxter(CrystalShape s1, CrystalShape s2, CrystalShape s3, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const ShapeTables& t3 = cat.shape(s3);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size() * t3.size();
    require_bound("verify_yang_baxter", total, bound);

    VerifierReport rep;
    rep.label = "yang-baxter n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2) + " (x) " +
                shape_text(s3);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            for (int32_t i3 = 0; i3 < t3.size(); ++i3) {
                std::vector<Slot> lhs = {{&t1, i1}, {&t2, i2}, {&t3, i3}};
                std::vector<Slot> rhs = lhs;
                std::string lchain = slots_text(lhs);
                std::string rchain = lchain;
                for (const size_t pos : {0, 1, 0}) {
                    apply_r_at(cat, lhs, pos);
                    lchain += " -> " + slots_text(lhs);
                }
                for (const size_t pos : {1, 0, 1}) {
                    apply_r_at(cat, rhs, pos);
                    rchain += " -> " + slots_text(rhs);
                }
                ++rep.checked;
                if (lhs != rhs) push_failure(rep, dropped, "left " + lchain + " | right " + rchain);
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_reflection(CrystalShape s1, CrystalShape s2, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size();
    require_bound("verify_reflection", total, bound);

    VerifierReport rep;
    rep.label = "reflection n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            std::vector<Slot> lhs = {{&t1, i1}, {&t2, i2}};
            std::vector<Slot> rhs = lhs;
            std::string lchain = slots_text(lhs);
            std::string rchain = lchain;
            apply_k_at(cat, lhs, 0);
            lchain += " -> " + slots_text(lhs);
            apply_r_at(cat, lhs, 0);
            lchain += " -> " + slots_text(lhs);
            apply_k_at(cat, lhs, 0);
            lchain += " -> " + slots_text(lhs);
            apply_r_at(cat, lhs, 0);
            lchain += " -> " + slots_text(lhs);

            apply_r_at(cat, rhs, 0);
            rchain += " -> " + slots_text(rhs);
            apply_k_at(cat, rhs, 0);
            rchain += " -> " + slots_text(rhs);
            apply_r_at(cat, rhs, 0);
            rchain += " -> " + slots_text(rhs);
            apply_k_at(cat, rhs, 0);
            rchain += " -> " + slots_text(rhs);

            ++rep.checked;
            if (lhs != rhs) push_failure(rep, dropped, "left " + lchain + " | right " + rchain);
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_affine_yang_baxter(CrystalShape s1, CrystalShape s2, CrystalShape s3, int dmin, int dmax,
                                         int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const ShapeTables& t3 = cat.shape(s3);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size() * t3.size();
    require_bound("verify_affine_yang_baxter", total, bound);

    VerifierReport rep;
    rep.label = "affine-yang-baxter n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2) +
                " (x) " + shape_text(s3) + " d=" + std::to_string(dmin) + ".." + std::to_string(dmax);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            for (int32_t i3 = 0; i3 < t3.size(); ++i3) {
                for (int d1 = dmin; d1 <= dmax; ++d1) {
                    for (int d2 = dmin; d2 <= dmax; ++d2) {
                        for (int d3 = dmin; d3 <= dmax; ++d3) {
                            std::vector<ASlot> lhs = {{&t1, i1, d1}, {&t2, i2, d2}, {&t3, i3, d3}};
                            std::vector<ASlot> rhs = lhs;
                            std::string lchain = aslots_text(lhs);
                            std::string rchain = lchain;
                            for (const size_t pos : {0, 1, 0}) {
                                apply_affine_r_at(cat, lhs, pos);
                                lchain += " -> " + aslots_text(lhs);
                            }
                            for (const size_t pos : {1, 0, 1}) {
                                apply_affine_r_at(cat, rhs, pos);
                                rchain += " -> " + aslots_text(rhs);
                            }
                            ++rep.checked;
                            if (lhs != rhs) push_failure(rep, dropped, "left " + lchain + " | right " + rchain);
                        }
                    }
                }
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_affine_reflection(CrystalShape s1, CrystalShape s2, int dmin, int dmax, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size();
    require_bound("verify_affine_reflection", total, bound);

    VerifierReport rep;
    rep.label = "affine-reflection n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2) +
                " d=" + std::to_string(dmin) + ".." + std::to_string(dmax);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            for (int d1 = dmin; d1 <= dmax; ++d1) {
                for (int d2 = dmin; d2 <= dmax; ++d2) {
                    std::vector<ASlot> lhs = {{&t1, i1, d1}, {&t2, i2, d2}};
                    std::vector<ASlot> rhs = lhs;
                    std::string lchain = aslots_text(lhs);
                    std::string rchain = lchain;
                    apply_affine_k_at(cat, lhs, 0);
                    lchain += " -> " + aslots_text(lhs);
                    apply_affine_r_at(cat, lhs, 0);
                    lchain += " -> " + aslots_text(lhs);
                    apply_affine_k_at(cat, lhs, 0);
                    lchain += " -> " + aslots_text(lhs);
                    apply_affine_r_at(cat, lhs, 0);
                    lchain += " -> " + aslots_text(lhs);

                    apply_affine_r_at(cat, rhs, 0);
                    rchain += " -> " + aslots_text(rhs);
                    apply_affine_k_at(cat, rhs, 0);
                    rchain += " -> " + aslots_text(rhs);
                    apply_affine_r_at(cat, rhs, 0);
                    rchain += " -> " + aslots_text(rhs);
                    apply_affine_k_at(cat, rhs, 0);
                    rchain += " -> " + aslots_text(rhs);

                    ++rep.checked;
                    if (lhs != rhs) push_failure(rep, dropped, "left " + lchain + " | right " + rchain);
                }
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_dual_prop(CrystalShape s1, CrystalShape s2, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const ShapeTables& v1 = cat.shape(dual_shape(s1));
    const ShapeTables& v2 = cat.shape(dual_shape(s2));
    const std::vector<int32_t>& dm1 = cat.dual_map(s1);
    const std::vector<int32_t>& dm2 = cat.dual_map(s2);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size();
    require_bound("verify_dual_prop", total, bound);
    const PairTables& p = cat.pair(s1, s2);
    const PairTables& pv = cat.pair(dual_shape(s2), dual_shape(s1));

    VerifierReport rep;
    rep.label = "dual-prop n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            const int32_t packed = p.r_image[static_cast<size_t>(static_cast<int64_t>(i1) * t2.size() + i2)];
            const int32_t c2 = packed / t1.size();
            const int32_t c1 = packed % t1.size();
            const int32_t dual_in = pv.r_image[static_cast<size_t>(
                static_cast<int64_t>(dm2[static_cast<size_t>(i2)]) * v1.size() + dm1[static_cast<size_t>(i1)])];
            const int32_t want = dm1[static_cast<size_t>(c1)] * v2.size() + dm2[static_cast<size_t>(c2)];
            ++rep.checked;
            if (dual_in != want) {
                push_failure(
                    rep, dropped,
                    "R(" + to_text(t1.elems[static_cast<size_t>(i1)]) + "|" + to_text(t2.elems[static_cast<size_t>(i2)]) +
                        ") = " + to_text(t2.elems[static_cast<size_t>(c2)]) + "|" +
                        to_text(t1.elems[static_cast<size_t>(c1)]) + " but R of the dualized pair gave " +
                        to_text(v1.elems[static_cast<size_t>(dual_in / v2.size())]) + "|" +
                        to_text(v2.elems[static_cast<size_t>(dual_in % v2.size())]));
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_corollary_dual(CrystalShape s, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& tb = cat.shape(s);
    const ShapeTables& tv = cat.shape(dual_shape(s));
    const std::vector<int32_t>& dm = cat.dual_map(s);
    require_bound("verify_corollary_dual", static_cast<int64_t>(tb.size()) * tv.size(), bound);
    const PairTables& p = cat.pair(dual_shape(s), s);

    VerifierReport rep;
    rep.label = "corollary-dual n=" + std::to_string(s.n) + " " + shape_text(s);
    size_t dropped = 0;
    for (int32_t i = 0; i < tb.size(); ++i) {
        const int32_t packed =
            p.r_image[static_cast<size_t>(static_cast<int64_t>(dm[static_cast<size_t>(i)]) * tb.size() + i)];
        const int32_t c = packed / tv.size();
        const int32_t cv = packed % tv.size();
        ++rep.checked;
        if (cv != dm[static_cast<size_t>(c)]) {
            push_failure(rep, dropped,
                         "R(dual(b)|b) for b=" + to_text(tb.elems[static_cast<size_t>(i)]) + " returned " +
                             to_text(tb.elems[static_cast<size_t>(c)]) + "|" +
                             to_text(tv.elems[static_cast<size_t>(cv)]) + ", second factor is not the first's dual");
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_figure1(const RectTableau& b, const RectTableau& c) {
    const Stopwatch sw;
    VerifierReport rep;
    rep.label = "figure1 n=" + std::to_string(b.n) + " b=" + to_text(b) + " c=" + to_text(c);
    size_t dropped = 0;

    const auto pair_at = [](std::vector<RectTableau>& w, size_t pos) {
        TensorElem y = combinatorial_r(TensorElem{{w[pos], w[pos + 1]}});
        w[pos] = std::move(y.factors[0]);
        w[pos + 1] = std::move(y.factors[1]);
    };
    const auto tuple_text = [](const std::vector<RectTableau>& w) {
        return to_text(w[0]) + "|" + to_text(w[1]) + "|" + to_text(w[2]) + "|" + to_text(w[3]);
    };
    const auto mirror = [](const std::vector<RectTableau>& w) {
        return w[0] == dual(w[3]) && w[1] == dual(w[2]);
    };

    const std::vector<RectTableau> start = {dual(c), dual(b), b, c};
    const std::vector<size_t> lhs_steps = {1, 0, 2, 1, 0, 2};
    const std::vector<size_t> rhs_steps = {2, 0, 1, 2, 0, 1};
    const std::vector<int> lhs_aligned = {0, 1, 3, 4, 6};
    const std::vector<int> rhs_aligned = {0, 2, 3, 5, 6};

    std::vector<RectTableau> lhs = start, rhs = start;
    std::string lchain = tuple_text(lhs), rchain = lchain;
    for (int stage = 0; stage <= 6; ++stage) {
        if (std::find(lhs_aligned.begin(), lhs_aligned.end(), stage) != lhs_aligned.end() && !mirror(lhs))
            push_failure(rep, dropped, "left staircase lost mirror self-duality at stage " + std::to_string(stage) +
                                           ": " + tuple_text(lhs));
        if (std::find(rhs_aligned.begin(), rhs_aligned.end(), stage) != rhs_aligned.end() && !mirror(rhs))
            push_failure(rep, dropped, "right staircase lost mirror self-duality at stage " + std::to_string(stage) +
                                           ": " + tuple_text(rhs));
        if (stage == 6) break;
        pair_at(lhs, lhs_steps[static_cast<size_t>(stage)]);
        lchain += " -> " + tuple_text(lhs);
        pair_at(rhs, rhs_steps[static_cast<size_t>(stage)]);
        rchain += " -> " + tuple_text(rhs);
    }
    if (lhs != rhs)
        push_failure(rep, dropped, "final states differ: left " + lchain + " | right " + rchain);

    /* the last two slots must carry the two reflection sides of b (x) c */
    std::vector<RectTableau> refl_lhs = {b, c};
    refl_lhs[0] = k_matrix(refl_lhs[0]);
    pair_at(refl_lhs, 0);
    refl_lhs[0] = k_matrix(refl_lhs[0]);
    pair_at(refl_lhs, 0);
    std::vector<RectTableau> refl_rhs = {b, c};
    pair_at(refl_rhs, 0);
    refl_rhs[0] = k_matrix(refl_rhs[0]);
    pair_at(refl_rhs, 0);
    refl_rhs[0] = k_matrix(refl_rhs[0]);
    if (lhs[2] != refl_lhs[0] || lhs[3] != refl_lhs[1])
        push_failure(rep, dropped, "left staircase slots 3,4 " + to_text(lhs[2]) + "|" + to_text(lhs[3]) +
                                       " differ from the reflection left side " + to_text(refl_lhs[0]) + "|" +
                                       to_text(refl_lhs[1]));
    if (rhs[2] != refl_rhs[0] || rhs[3] != refl_rhs[1])
        push_failure(rep, dropped, "right staircase slots 3,4 " + to_text(rhs[2]) + "|" + to_text(rhs[3]) +
                                       " differ from the reflection right side " + to_text(refl_rhs[0]) + "|" +
                                       to_text(refl_rhs[1]));

    rep.checked = 1;
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_inversion(CrystalShape s1, CrystalShape s2, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const int64_t total = static_cast<int64_t>(t1.size()) * t2.size();
    require_bound("verify_inversion", total, bound);
    const PairTables& p12 = cat.pair(s1, s2);
    const PairTables& p21 = cat.pair(s2, s1);

    VerifierReport rep;
    rep.label = "inversion n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2);
    size_t dropped = 0;
    const bool same = s1 == s2;
    for (int32_t i1 = 0; i1 < t1.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t2.size(); ++i2) {
            const int32_t packed = p12.r_image[static_cast<size_t>(static_cast<int64_t>(i1) * t2.size() + i2)];
            const int32_t c2 = packed / t1.size();
            const int32_t c1 = packed % t1.size();
            const int32_t back = p21.r_image[static_cast<size_t>(static_cast<int64_t>(c2) * t1.size() + c1)];
            ++rep.checked;
            if (back != i1 * t2.size() + i2) {
                push_failure(rep, dropped, "round trip moved " + to_text(t1.elems[static_cast<size_t>(i1)]) + "|" +
                                               to_text(t2.elems[static_cast<size_t>(i2)]) + " to " +
                                               to_text(t1.elems[static_cast<size_t>(back / t2.size())]) + "|" +
                                               to_text(t2.elems[static_cast<size_t>(back % t2.size())]));
            }
            if (same && packed != i1 * t1.size() + i2) {
                push_failure(rep, dropped, "R on equal shapes moved " + to_text(t1.elems[static_cast<size_t>(i1)]) +
                                               "|" + to_text(t2.elems[static_cast<size_t>(i2)]));
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_r_identity(CrystalShape s, int64_t bound) {
    const Stopwatch sw;
    Catalog& cat = Catalog::instance();
    const ShapeTables& t = cat.shape(s);
    const int64_t total = static_cast<int64_t>(t.size()) * t.size();
    require_bound("verify_r_identity", total, bound);
    const PairTables& p = cat.pair(s, s);

    VerifierReport rep;
    rep.label = "r-identity n=" + std::to_string(s.n) + " " + shape_text(s) + " (x) " + shape_text(s);
    size_t dropped = 0;
    for (int32_t i1 = 0; i1 < t.size(); ++i1) {
        for (int32_t i2 = 0; i2 < t.size(); ++i2) {
            const int32_t packed = p.r_image[static_cast<size_t>(static_cast<int64_t>(i1) * t.size() + i2)];
            ++rep.checked;
            if (packed != i1 * t.size() + i2) {
                push_failure(rep, dropped, "R moved " + to_text(t.elems[static_cast<size_t>(i1)]) + "|" +
                                               to_text(t.elems[static_cast<size_t>(i2)]) + " to " +
                                               to_text(t.elems[static_cast<size_t>(packed / t.size())]) + "|" +
                                               to_text(t.elems[static_cast<size_t>(packed % t.size())]));
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_oracle(CrystalShape s1, CrystalShape s2, int64_t bound) {
    const Stopwatch sw;
    const auto b1s = enumerate_crystal(s1.n, s1.k, s1.l);
    const auto b2s = enumerate_crystal(s2.n, s2.k, s2.l);
    const int64_t total = static_cast<int64_t>(b1s.size()) * b2s.size();
    require_bound("verify_oracle", total, bound);

    VerifierReport rep;
    rep.label = "oracle agreement n=" + std::to_string(s1.n) + " " + shape_text(s1) + " (x) " + shape_text(s2);
    size_t dropped = 0;
    for (const auto& b1 : b1s) {
        for (const auto& b2 : b2s) {
            const TensorElem x{{b1, b2}};
            const TensorElem graph = combinatorial_r(x);
            const TensorElem oracle = plactic_r(x);
            ++rep.checked;
            if (graph != oracle) {
                push_failure(rep, dropped, "on " + to_text(x) + " the graph route gives " + to_text(graph) +
                                               " but the factorization route gives " + to_text(oracle));
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_connectivity(const std::vector<CrystalShape>& shapes, int64_t bound, bool classical_only) {
    const Stopwatch sw;
    if (shapes.empty()) throw std::invalid_argument("verify_connectivity: no factors given");
    Catalog& cat = Catalog::instance();
    std::vector<const ShapeTables*> tabs;
    tabs.reserve(shapes.size());
    for (const CrystalShape& s : shapes) tabs.push_back(&cat.shape(s));
    const ProductSpace space(tabs);
    require_bound("verify_connectivity", space.size(), bound);

    VerifierReport rep;
    rep.label = "connectivity n=" + std::to_string(shapes.front().n);
    for (const CrystalShape& s : shapes) rep.label += " " + shape_text(s);
    if (classical_only) rep.label += " (classical operators only)";

    const int n = shapes.front().n;
    std::vector<char> seen(static_cast<size_t>(space.size()), 0);
    std::deque<int64_t> queue;
    seen[0] = 1;
    queue.push_back(0);
    int64_t reached = 1;
    while (!queue.empty()) {
        const int64_t x = queue.front();
        queue.pop_front();
        for (int i = classical_only ? 1 : 0; i < n; ++i) {
            for (const int64_t y : {space.apply_e(i, x), space.apply_f(i, x)}) {
                if (y >= 0 && !seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    ++reached;
                    queue.push_back(y);
                }
            }
        }
    }
    rep.checked = space.size();
    if (reached != space.size()) {
        const auto miss = std::find(seen.begin(), seen.end(), 0) - seen.begin();
        const auto parts = space.decode(static_cast<int64_t>(miss));
        std::string text;
        for (size_t m = 0; m < parts.size(); ++m) {
            if (m) text += '|';
            text += to_text(tabs[m]->elems[static_cast<size_t>(parts[m])]);
        }
        rep.failures.push_back("reached " + std::to_string(reached) + " of " + std::to_string(space.size()) +
                               " elements; unreached example: " + text);
    }
    rep.millis = sw.millis();
    return rep;
}

VerifierReport verify_dual_compat(CrystalShape s, int64_t bound) {
    const Stopwatch sw;
    const auto elems = enumerate_crystal(s.n, s.k, s.l);
    require_bound("verify_dual_compat", static_cast<int64_t>(elems.size()), bound);

    VerifierReport rep;
    rep.label = "dual-compat n=" + std::to_string(s.n) + " " + shape_text(s);
    size_t dropped = 0;
    for (const RectTableau& b : elems) {
        const RectTableau db = dual(b);
        bool ok = true;
        for (int i = 0; i < s.n && ok; ++i) {
            const auto fb = apply_f(i, b);
            const auto edb = apply_e(i, db);
            ok = fb.has_value() == edb.has_value() && (!fb || dual(*fb) == *edb);
            if (ok) {
                const auto eb = apply_e(i, b);
                const auto fdb = apply_f(i, db);
                ok = eb.has_value() == fdb.has_value() && (!eb || dual(*eb) == *fdb);
            }
        }
        ++rep.checked;
        if (!ok) push_failure(rep, dropped, "operator/dual exchange failed on " + to_text(b));
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_promotion(CrystalShape s, int64_t bound) {
    const Stopwatch sw;
    const auto elems = enumerate_crystal(s.n, s.k, s.l);
    require_bound("verify_promotion", static_cast<int64_t>(elems.size()), bound);

    VerifierReport rep;
    rep.label = "promotion n=" + std::to_string(s.n) + " " + shape_text(s);
    size_t dropped = 0;
    for (const RectTableau& b : elems) {
        RectTableau t = b;
        bool ok = true;
        for (int step = 0; step < s.n && ok; ++step) {
            const RectTableau next = promotion(t);
            const std::vector<int> before = content(t);
            const std::vector<int> after = content(next);
            for (int i = 0; i < s.n && ok; ++i)
                ok = after[static_cast<size_t>(i)] == before[static_cast<size_t>((i + s.n - 1) % s.n)];
            ok = ok && promotion_inverse(next) == t;
            t = next;
        }
        ok = ok && t == b;
        ++rep.checked;
        if (!ok) push_failure(rep, dropped, "promotion laws failed on " + to_text(b));
    }
    seal(rep, dropped, sw);
    return rep;
}

bool connectivity_check(const std::vector<CrystalShape>& shapes, int64_t bound) {
    return verify_connectivity(shapes, bound).pass();
}

} /* namespace krc */
