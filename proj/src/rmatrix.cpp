#include "krc/rmatrix.hpp"

#include "krc/catalog.hpp"
#include "krc/plactic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace krc {

namespace {

void require_pair(const TensorElem& x, const char* who) {
    if (x.factors.size() != 2)
        throw std::invalid_argument(std::string(who) + ": expected exactly two tensor factors, got " +
                                    std::to_string(x.factors.size()));
}

} /* namespace */

TensorElem combinatorial_r(const TensorElem& x) {
    require_pair(x, "combinatorial_r");
    auto [h, trace] = to_highest(x);
    TensorElem y = classical_highest_of_weight(shape_of(x.factors[1]), shape_of(x.factors[0]), weight(h));
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        auto next = apply_f(*it, y);
        if (!next)
            throw std::logic_error("combinatorial_r: replay of the raising trace vanished");
        y = std::move(*next);
    }
    return y;
}

namespace {

/* product row word -> (index in B2, index in B1); the row word of a
 * semistandard tableau determines the tableau, so it is a sound key. */
struct FactorTable {
    std::vector<RectTableau> elems2, elems1;
    std::map<std::vector<int>, std::pair<int32_t, int32_t>> by_product;
};

const FactorTable& factor_table(const CrystalShape& s2, const CrystalShape& s1, size_t bound) {
    static std::map<std::pair<CrystalShape, CrystalShape>, FactorTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(s2, s1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FactorTable tab;
    tab.elems2 = enumerate_crystal(s2.n, s2.k, s2.l);
    tab.elems1 = enumerate_crystal(s1.n, s1.k, s1.l);
    if (tab.elems2.size() * tab.elems1.size() > bound)
        throw std::invalid_argument("plactic_r: product space of " +
                                    std::to_string(tab.elems2.size() * tab.elems1.size()) +
                                    " pairs exceeds the oracle bound " + std::to_string(bound));
    for (size_t i2 = 0; i2 < tab.elems2.size(); ++i2) {
        for (size_t i1 = 0; i1 < tab.elems1.size(); ++i1) {
            GeneralTableau p = plactic_product(tab.elems2[i2], tab.elems1[i1]);
            auto [pos, fresh] = tab.by_product.emplace(
                row_word(p), std::make_pair(static_cast<int32_t>(i2), static_cast<int32_t>(i1)));
            if (!fresh)
                throw std::logic_error("plactic_r: two pairs share a tableau product; factorization is not unique");
        }
    }
    return cache.emplace(std::move(key), std::move(tab)).first->second;
}

} /* namespace */

TensorElem plactic_r(const TensorElem& x, size_t bound) {
    require_pair(x, "plactic_r");
    const CrystalShape s1 = shape_of(x.factors[0]);
    const CrystalShape s2 = shape_of(x.factors[1]);
    const FactorTable& tab = factor_table(s2, s1, bound);
    GeneralTableau p = plactic_product(x.factors[0], x.factors[1]);
    auto it = tab.by_product.find(row_word(p));
    if (it == tab.by_product.end())
        throw std::logic_error("plactic_r: tableau product admits no factorization over the swapped pair");
    const auto [i2, i1] = it->second;
    return TensorElem{{tab.elems2[static_cast<size_t>(i2)], tab.elems1[static_cast<size_t>(i1)]}};
}

int energy_h(const TensorElem& x) {
    require_pair(x, "energy_h");
    const CrystalShape s1 = shape_of(x.factors[0]);
    const CrystalShape s2 = shape_of(x.factors[1]);
    Catalog& cat = Catalog::instance();
    const ShapeTables& t1 = cat.shape(s1);
    const ShapeTables& t2 = cat.shape(s2);
    const PairTables& p = cat.pair(s1, s2);
    const int64_t idx =
        static_cast<int64_t>(t1.index_of(x.factors[0])) * static_cast<int64_t>(t2.size()) + t2.index_of(x.factors[1]);
    return p.energy[static_cast<size_t>(idx)];
}

std::pair<AffineElem, AffineElem> affine_r(const AffineElem& a, const AffineElem& b) {
    const TensorElem x{{a.t, b.t}};
    const int h = energy_h(x);
    TensorElem y = combinatorial_r(x);
    return {AffineElem{b.d + h, std::move(y.factors[0])}, AffineElem{a.d - h, std::move(y.factors[1])}};
}

} /* namespace krc */
