#include "krc/catalog.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace krc {

int32_t ShapeTables::index_of(const RectTableau& t) const {
    auto it = index.find(t);
    if (it == index.end()) throw std::invalid_argument("tableau is not an element of " + std::to_string(shape.k) +
                                                       "x" + std::to_string(shape.l) + " over n=" + std::to_string(shape.n));
    return it->second;
}

ProductSpace::ProductSpace(std::vector<const ShapeTables*> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("empty product space");
    for (const ShapeTables* f : factors_) size_ *= f->size();
}

int64_t ProductSpace::encode(const std::vector<int32_t>& parts) const {
    int64_t idx = 0;
    for (size_t m = 0; m < factors_.size(); ++m) idx = idx * factors_[m]->size() + parts[m];
    return idx;
}

std::vector<int32_t> ProductSpace::decode(int64_t idx) const {
    std::vector<int32_t> parts(factors_.size());
    for (size_t m = factors_.size(); m-- > 0;) {
        parts[m] = static_cast<int32_t>(idx % factors_[m]->size());
        idx /= factors_[m]->size();
    }
    return parts;
}

namespace {

/*
 * Fold of the factors' reduced blocks -^phi +^eps, left to right.
 * Surviving '-' runs precede surviving '+' runs; the leftmost surviving
 * '+' locates e's acting factor, the rightmost surviving '-' locates
 * f's.
 */
struct BlockFold {
    int eps = 0, phi = 0;
    int e_factor = -1, f_factor = -1;
};

BlockFold fold_blocks(const std::vector<const ShapeTables*>& factors, const std::vector<int32_t>& parts, int i) {
    std::vector<std::pair<int, int>> plus_runs;  /* (factor, count) */
    std::vector<std::pair<int, int>> minus_runs; /* (factor, count) */
    for (size_t m = 0; m < factors.size(); ++m) {
        const auto& tab = *factors[m];
        int minus = tab.phi_tab[static_cast<size_t>(i)][static_cast<size_t>(parts[m])];
        const int plus = tab.eps_tab[static_cast<size_t>(i)][static_cast<size_t>(parts[m])];
        while (minus > 0 && !plus_runs.empty()) {
            const int cancel = std::min(minus, plus_runs.back().second);
            minus -= cancel;
            plus_runs.back().second -= cancel;
            if (plus_runs.back().second == 0) plus_runs.pop_back();
        }
        if (minus > 0) minus_runs.emplace_back(static_cast<int>(m), minus);
        if (plus > 0) plus_runs.emplace_back(static_cast<int>(m), plus);
    }
    BlockFold f;
    for (const auto& [m, c] : plus_runs) f.eps += c;
    for (const auto& [m, c] : minus_runs) f.phi += c;
    if (!plus_runs.empty()) f.e_factor = plus_runs.front().first;
    if (!minus_runs.empty()) f.f_factor = minus_runs.back().first;
    return f;
}

} /* namespace */

int ProductSpace::eps(int i, int64_t idx) const { return fold_blocks(factors_, decode(idx), i).eps; }

int ProductSpace::phi(int i, int64_t idx) const { return fold_blocks(factors_, decode(idx), i).phi; }

int ProductSpace::acting_factor_e(int i, int64_t idx) const { return fold_blocks(factors_, decode(idx), i).e_factor; }

int ProductSpace::acting_factor_f(int i, int64_t idx) const { return fold_blocks(factors_, decode(idx), i).f_factor; }

int64_t ProductSpace::apply_e(int i, int64_t idx) const {
    std::vector<int32_t> parts = decode(idx);
    const BlockFold f = fold_blocks(factors_, parts, i);
    if (f.e_factor < 0) return -1;
    const int32_t up = factors_[static_cast<size_t>(f.e_factor)]
                           ->e_tab[static_cast<size_t>(i)][static_cast<size_t>(parts[static_cast<size_t>(f.e_factor)])];
    if (up < 0) throw std::logic_error("factor table rejected e below a surviving '+'");
    parts[static_cast<size_t>(f.e_factor)] = up;
    return encode(parts);
}

int64_t ProductSpace::apply_f(int i, int64_t idx) const {
    std::vector<int32_t> parts = decode(idx);
    const BlockFold f = fold_blocks(factors_, parts, i);
    if (f.f_factor < 0) return -1;
    const int32_t down = factors_[static_cast<size_t>(f.f_factor)]
                             ->f_tab[static_cast<size_t>(i)][static_cast<size_t>(parts[static_cast<size_t>(f.f_factor)])];
    if (down < 0) throw std::logic_error("factor table rejected f below a surviving '-'");
    parts[static_cast<size_t>(f.f_factor)] = down;
    return encode(parts);
}

bool ProductSpace::is_classical_highest(int64_t idx) const {
    const std::vector<int32_t> parts = decode(idx);
    const int n = factors_.front()->shape.n;
    for (int i = 1; i < n; ++i)
        if (fold_blocks(factors_, parts, i).eps > 0) return false;
    return true;
}

std::vector<int> ProductSpace::weight(int64_t idx) const {
    const std::vector<int32_t> parts = decode(idx);
    std::vector<int> w(static_cast<size_t>(factors_.front()->shape.n), 0);
    for (size_t m = 0; m < factors_.size(); ++m) {
        const auto& c = factors_[m]->contents[static_cast<size_t>(parts[m])];
        for (size_t j = 0; j < w.size(); ++j) w[j] += c[j];
    }
    return w;
}

Catalog& Catalog::instance() {
    static Catalog cat;
    return cat;
}

const ShapeTables& Catalog::shape(CrystalShape s) {
    std::scoped_lock lock(mu_);
    return shape_impl(s);
}

const ShapeTables& Catalog::shape_impl(CrystalShape s) {
    auto it = shapes_.find(s);
    if (it != shapes_.end()) return *it->second;

    auto tab = std::make_unique<ShapeTables>();
    tab->shape = s;
    tab->elems = enumerate_crystal(s.n, s.k, s.l);
    const int32_t sz = tab->size();
    for (int32_t j = 0; j < sz; ++j) tab->index.emplace(tab->elems[static_cast<size_t>(j)], j);
    tab->contents.reserve(static_cast<size_t>(sz));
    for (const auto& t : tab->elems) tab->contents.push_back(content(t));
    tab->highest = tab->index_of(classical_highest(s.n, s.k, s.l));

    tab->e_tab.assign(static_cast<size_t>(s.n), std::vector<int32_t>(static_cast<size_t>(sz), -1));
    tab->f_tab = tab->e_tab;
    tab->eps_tab.assign(static_cast<size_t>(s.n), std::vector<int32_t>(static_cast<size_t>(sz), 0));
    tab->phi_tab = tab->eps_tab;
    for (int i = 0; i < s.n; ++i)
        for (int32_t j = 0; j < sz; ++j) {
            const RectTableau& t = tab->elems[static_cast<size_t>(j)];
            tab->eps_tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = eps(i, t);
            tab->phi_tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = phi(i, t);
            if (auto up = apply_e(i, t)) tab->e_tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = tab->index_of(*up);
            if (auto down = apply_f(i, t)) tab->f_tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = tab->index_of(*down);
        }
    for (int i = 0; i < s.n; ++i)
        for (int32_t j = 0; j < sz; ++j) {
            const int32_t down = tab->f_tab[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (down >= 0 && tab->e_tab[static_cast<size_t>(i)][static_cast<size_t>(down)] != j)
                throw std::logic_error("e and f tables are not mutually inverse");
        }

    return *shapes_.emplace(s, std::move(tab)).first->second;
}

const std::vector<int32_t>& Catalog::dual_map(CrystalShape s) {
    std::scoped_lock lock(mu_);
    return dual_map_impl(s);
}

const std::vector<int32_t>& Catalog::dual_map_impl(CrystalShape s) {
    auto it = duals_.find(s);
    if (it != duals_.end()) return *it->second;

    const ShapeTables& from = shape_impl(s);
    const ShapeTables& to = shape_impl(dual_shape(s));
    auto map = std::make_unique<std::vector<int32_t>>(static_cast<size_t>(from.size()));
    for (int32_t j = 0; j < from.size(); ++j)
        (*map)[static_cast<size_t>(j)] = to.index_of(dual(from.elems[static_cast<size_t>(j)]));
    return *duals_.emplace(s, std::move(map)).first->second;
}

const PairTables& Catalog::pair(CrystalShape s1, CrystalShape s2) {
    std::scoped_lock lock(mu_);
    return pair_impl(s1, s2);
}

const PairTables& Catalog::pair_impl(CrystalShape s1, CrystalShape s2) {
    auto it = pairs_.find({s1, s2});
    if (it != pairs_.end()) return *it->second;
    if (s1.n != s2.n) throw std::invalid_argument("pair shapes disagree on the alphabet");

    const ShapeTables& t1 = shape_impl(s1);
    const ShapeTables& t2 = shape_impl(s2);
    const ProductSpace fwd({&t1, &t2});
    const ProductSpace rev({&t2, &t1});
    const int n = s1.n;
    const int64_t P = fwd.size();

    auto tab = std::make_unique<PairTables>();
    tab->s1 = s1;
    tab->s2 = s2;
    tab->size1 = t1.size();
    tab->size2 = t2.size();
    tab->r_image.assign(static_cast<size_t>(P), -1);

    /* classical highest elements of the reversed product, by weight */
    std::map<std::vector<int>, int64_t> rev_highest;
    for (int64_t y = 0; y < P; ++y) {
        if (!rev.is_classical_highest(y)) continue;
        if (!rev_highest.emplace(rev.weight(y), y).second)
            throw std::logic_error("two classical highest elements share a weight");
    }

    /* lock-step descent from matched highest pairs */
    std::deque<std::pair<int64_t, int64_t>> queue;
    for (int64_t x = 0; x < P; ++x) {
        if (!fwd.is_classical_highest(x)) continue;
        auto match = rev_highest.find(fwd.weight(x));
        if (match == rev_highest.end()) throw std::logic_error("classical highest element lacks a weight match");
        tab->r_image[static_cast<size_t>(x)] = static_cast<int32_t>(match->second);
        queue.emplace_back(x, match->second);
        while (!queue.empty()) {
            auto [cx, cy] = queue.front();
            queue.pop_front();
            for (int i = 1; i < n; ++i) {
                const int64_t nx = fwd.apply_f(i, cx);
                const int64_t ny = rev.apply_f(i, cy);
                if ((nx < 0) != (ny < 0)) throw std::logic_error("lock-step descent lost synchrony");
                if (nx < 0) continue;
                int32_t& slot = tab->r_image[static_cast<size_t>(nx)];
                if (slot < 0) {
                    slot = static_cast<int32_t>(ny);
                    queue.emplace_back(nx, ny);
                } else if (slot != ny) {
                    throw std::logic_error("lock-step descent disagreed on a revisit");
                }
            }
        }
    }
    for (int64_t x = 0; x < P; ++x)
        if (tab->r_image[static_cast<size_t>(x)] < 0) throw std::logic_error("R table left an element unassigned");

    /*
     * Energy.  delta of the index-0 raising edge at x: +1 when e_0 acts
     * on the left factor at both x and R(x), -1 when on the right
     * factor at both, 0 otherwise.
     */
    auto delta_e0 = [&](int64_t x) -> int {
        const int at_x = fwd.acting_factor_e(0, x);
        const int at_rx = rev.acting_factor_e(0, tab->r_image[static_cast<size_t>(x)]);
        if (at_x < 0 || at_rx < 0) throw std::logic_error("e_0 applicability differs across R");
        if (at_x == 0 && at_rx == 0) return 1;
        if (at_x == 1 && at_rx == 1) return -1;
        return 0;
    };
    auto delta_f0 = [&](int64_t x) -> int {
        const int at_x = fwd.acting_factor_f(0, x);
        const int at_rx = rev.acting_factor_f(0, tab->r_image[static_cast<size_t>(x)]);
        if (at_x < 0 || at_rx < 0) throw std::logic_error("f_0 applicability differs across R");
        if (at_x == 0 && at_rx == 0) return 1;
        if (at_x == 1 && at_rx == 1) return -1;
        return 0;
    };

    constexpr int32_t unset = std::numeric_limits<int32_t>::min();
    tab->energy.assign(static_cast<size_t>(P), unset);
    const int64_t anchor = fwd.encode({t1.highest, t2.highest});
    tab->energy[static_cast<size_t>(anchor)] = 0;
    std::deque<int64_t> bfs{anchor};
    auto visit = [&](int64_t from, int64_t to, int32_t value) {
        int32_t& slot = tab->energy[static_cast<size_t>(to)];
        if (slot == unset) {
            slot = value;
            bfs.push_back(to);
        } else if (slot != value) {
            throw std::logic_error("energy assignment is inconsistent at edge " + std::to_string(from) + " -> " +
                                   std::to_string(to));
        }
    };
    while (!bfs.empty()) {
        const int64_t x = bfs.front();
        bfs.pop_front();
        const int32_t h = tab->energy[static_cast<size_t>(x)];
        for (int i = 0; i < n; ++i) {
            const int64_t up = fwd.apply_e(i, x);
            if (up >= 0) visit(x, up, h + (i == 0 ? delta_e0(x) : 0));
            const int64_t down = fwd.apply_f(i, x);
            if (down >= 0) visit(x, down, h - (i == 0 ? delta_f0(x) : 0));
        }
    }
    for (int64_t x = 0; x < P; ++x)
        if (tab->energy[static_cast<size_t>(x)] == unset)
            throw std::logic_error("product is not connected under the affine operators");

    /* re-verify the defining rule on every raising edge */
    for (int64_t x = 0; x < P; ++x)
        for (int i = 0; i < n; ++i) {
            const int64_t up = fwd.apply_e(i, x);
            if (up < 0) continue;
            const int32_t expect = tab->energy[static_cast<size_t>(x)] + (i == 0 ? delta_e0(x) : 0);
            if (tab->energy[static_cast<size_t>(up)] != expect)
                throw std::logic_error("energy table violates the edge rule");
        }

    return *pairs_.emplace(std::make_pair(s1, s2), std::move(tab)).first->second;
}

const KTable& Catalog::kmatrix(CrystalShape s) {
    std::scoped_lock lock(mu_);
    auto it = ks_.find(s);
    if (it != ks_.end()) return *it->second;

    const CrystalShape sv = dual_shape(s);
    const ShapeTables& tb = shape_impl(s);
    const ShapeTables& tv = shape_impl(sv);
    const std::vector<int32_t>& dual_b = dual_map_impl(s);
    const PairTables& rp = pair_impl(sv, s);

    auto tab = std::make_unique<KTable>();
    tab->shape = s;
    tab->image.assign(static_cast<size_t>(tb.size()), -1);
    for (int32_t b = 0; b < tb.size(); ++b) {
        const int64_t x = static_cast<int64_t>(dual_b[static_cast<size_t>(b)]) * tb.size() + b;
        const int64_t y = rp.r_image[static_cast<size_t>(x)];
        const int32_t c = static_cast<int32_t>(y / tv.size());
        const int32_t cv = static_cast<int32_t>(y % tv.size());
        if (cv != dual_b[static_cast<size_t>(c)])
            throw std::logic_error("R on b^vee (x) b did not return a dual pair");
        tab->image[static_cast<size_t>(b)] = cv;
    }
    return *ks_.emplace(s, std::move(tab)).first->second;
}

} /* namespace krc */
