#pragma once

#include "krc/crystal.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

/*
 * Integer index tables over enumerated crystals, so that exhaustive
 * sweeps run on array lookups instead of tableau manipulation.
 *
 * ShapeTables fixes the enumeration order of one crystal and tabulates
 * eps/phi and the operator actions for every index 0..n-1.
 *
 * ProductSpace views an ordered factor list as the flat index
 * idx = ((i1 * |B2| + i2) * |B3| + i3) ... and evaluates tensor
 * operations by folding the factors' reduced (phi, eps) blocks.
 *
 * PairTables holds, for an ordered pair (B1, B2), the R-matrix image
 * table into the reversed product and the energy table.  R is built by
 * classical-component descent: classical highest elements are matched
 * across B1 (x) B2 and B2 (x) B1 by weight (unique per weight since
 * rectangles tensor multiplicity-free) and the matched pairs are
 * lowered in lock step with f_1..f_{n-1}.  The energy table is filled
 * by search from u1 (x) u2 and then re-verified edge by edge: an
 * index-0 raising edge adds +1 when e_0 acts on the left factor both
 * before and after R, -1 when it acts on the right factor both times,
 * and 0 otherwise; classical edges copy the value.
 *
 * KTable tabulates b -> c' from R_{B^vee,B}(b^vee (x) b) = c (x) c',
 * asserting c' = dual(c).
 *
 * Structural failures (weight collisions, lock-step disagreement,
 * energy inconsistency, a broken duality corollary) throw
 * std::logic_error: they can only mean an implementation bug.
 */

namespace krc {

struct ShapeTables {
    CrystalShape shape;
    std::vector<RectTableau> elems; /* enumeration order */
    std::map<RectTableau, int32_t> index;
    std::vector<std::vector<int>> contents;
    std::vector<std::vector<int32_t>> e_tab, f_tab;     /* [i][idx], -1 for none */
    std::vector<std::vector<int32_t>> eps_tab, phi_tab; /* [i][idx] */
    int32_t highest = -1; /* index of the row-filled element u */

    int32_t size() const { return static_cast<int32_t>(elems.size()); }
    int32_t index_of(const RectTableau& t) const;
};

class ProductSpace {
  public:
    explicit ProductSpace(std::vector<const ShapeTables*> factors);

    int64_t size() const { return size_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    const ShapeTables& factor(int m) const { return *factors_[static_cast<size_t>(m)]; }

    int64_t encode(const std::vector<int32_t>& parts) const;
    std::vector<int32_t> decode(int64_t idx) const;

    int eps(int i, int64_t idx) const;
    int phi(int i, int64_t idx) const;
    int64_t apply_e(int i, int64_t idx) const; /* -1 for none */
    int64_t apply_f(int i, int64_t idx) const;
    int acting_factor_e(int i, int64_t idx) const; /* -1 when the action vanishes */
    int acting_factor_f(int i, int64_t idx) const;

    bool is_classical_highest(int64_t idx) const;
    std::vector<int> weight(int64_t idx) const;

  private:
    std::vector<const ShapeTables*> factors_;
    int64_t size_ = 1;
};

struct PairTables {
    CrystalShape s1, s2;
    int32_t size1 = 0, size2 = 0;
    std::vector<int32_t> r_image; /* i1*size2+i2 -> i2'*size1+i1' */
    std::vector<int32_t> energy;
};

struct KTable {
    CrystalShape shape;
    std::vector<int32_t> image; /* index in B -> index in B^vee */
};

class Catalog {
  public:
    static Catalog& instance();

    const ShapeTables& shape(CrystalShape s);
    const std::vector<int32_t>& dual_map(CrystalShape s); /* index in B -> index in B^vee */
    const PairTables& pair(CrystalShape s1, CrystalShape s2);
    const KTable& kmatrix(CrystalShape s);

  private:
    Catalog() = default;

    const ShapeTables& shape_impl(CrystalShape s);
    const std::vector<int32_t>& dual_map_impl(CrystalShape s);
    const PairTables& pair_impl(CrystalShape s1, CrystalShape s2);

    std::recursive_mutex mu_;
    std::map<CrystalShape, std::unique_ptr<ShapeTables>> shapes_;
    std::map<CrystalShape, std::unique_ptr<std::vector<int32_t>>> duals_;
    std::map<std::pair<CrystalShape, CrystalShape>, std::unique_ptr<PairTables>> pairs_;
    std::map<CrystalShape, std::unique_ptr<KTable>> ks_;
};

} /* namespace krc */
