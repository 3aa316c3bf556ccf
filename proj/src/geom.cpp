#include "krc/geom.hpp"

#include "krc/crystal.hpp"
#include "krc/kmatrix.hpp"
#include "krc/rmatrix.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

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

template <Semifield S>
std::string vec_text(const VecPoint<S>& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.x.size(); ++i) {
        if (i) out += ",";
        out += p.x[i].str();
    }
    return out + ")";
}

template <Semifield S>
VecPoint<S> content_point(const RectTableau& t) {
    VecPoint<S> out{t.n, {}};
    out.x.reserve(static_cast<size_t>(t.n));
    for (const int c : content(t)) out.x.push_back(S(c));
    return out;
}

} /* namespace */

GeomPoint<TropInt> tableau_to_tropical(const RectTableau& t) {
    GeomPoint<TropInt> p;
    p.n = t.n;
    p.k = t.rows;
    p.s = TropInt(t.cols);
    for (int i = 1; i <= t.rows; ++i)
        for (int j = i; j <= i + t.n - t.rows - 1; ++j) p.x[{i, j}] = TropInt(0);
    for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
            const int letter = t.at(r, c);
            if (in_free_range(t.n, t.rows, r + 1, letter)) {
                auto& coord = p.x[{r + 1, letter}];
                coord = TropInt(coord.value() + 1);
            }
        }
    }
    return p;
}

RectTableau tropical_to_tableau(const GeomPoint<TropInt>& p) {
    require_point(p);
    if (p.s.value() < 0 || p.s.value() > 1 << 20)
        throw std::invalid_argument("tropical point has unusable length " + p.s.str());
    const int l = static_cast<int>(p.s.value());

    RectTableau t;
    t.n = p.n;
    t.rows = p.k;
    t.cols = l;
    t.cells.reserve(static_cast<size_t>(p.k) * static_cast<size_t>(l));
    for (int i = 1; i <= p.k; ++i) {
        int64_t row_total = 0;
        for (int j = i; j <= i + p.n - p.k - 1; ++j) {
            const int64_t count = p.x.at({i, j}).value();
            if (count < 0)
                throw std::invalid_argument("tropical point has a negative multiplicity at " + std::to_string(i) +
                                            "," + std::to_string(j));
            t.cells.insert(t.cells.end(), static_cast<size_t>(count), j);
            row_total += count;
        }
        const int64_t boundary = derived_coord(p, i).value();
        if (boundary < 0 || row_total + boundary != l)
            throw std::invalid_argument("tropical point's row " + std::to_string(i) +
                                        " multiplicities do not sum to the length");
        t.cells.insert(t.cells.end(), static_cast<size_t>(boundary), i + p.n - p.k);
    }
    require_valid(t);
    return t;
}

VerifierReport verify_tropical_k(int l) {
    const Stopwatch sw;
    VerifierReport rep;
    rep.label = "tropical-k n=5 B^{2," + std::to_string(l) + "}";
    size_t dropped = 0;
    for (const RectTableau& b : enumerate_crystal(5, 2, l)) {
        const RectTableau expect = dual(k_matrix(b)); /* pre-dual image */
        const RectTableau got = tropical_to_tableau(geom_k2_n5(tableau_to_tropical(b)));
        ++rep.checked;
        if (got != expect)
            push_failure(rep, dropped, "b=" + to_text(b) + ": coordinate route gave " + to_text(got) +
                                           ", combinatorial route gave " + to_text(expect));
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_tropical_r_top(int n, int l, int m) {
    const Stopwatch sw;
    VerifierReport rep;
    rep.label = "tropical-r n=" + std::to_string(n) + " dual B^{1," + std::to_string(l) + "} (x) B^{1," +
                std::to_string(m) + "}";
    size_t dropped = 0;
    for (const RectTableau& b : enumerate_crystal(n, 1, l)) {
        for (const RectTableau& c : enumerate_crystal(n, 1, m)) {
            const TensorElem y = combinatorial_r(TensorElem{{dual(b), c}});
            const RectTableau& ct = y.factors[0];
            const RectTableau bt = dual(y.factors[1]);
            const auto [yt, xt] = geom_r_top(content_point<TropInt>(b), content_point<TropInt>(c));
            ++rep.checked;
            if (xt != content_point<TropInt>(bt) || yt != content_point<TropInt>(ct))
                push_failure(rep, dropped, "dual(" + to_text(b) + ")|" + to_text(c) + ": coordinate route gave " +
                                               vec_text(yt) + " x " + vec_text(xt) + ", combinatorial route gave " +
                                               vec_text(content_point<TropInt>(ct)) + " x " +
                                               vec_text(content_point<TropInt>(bt)));
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

namespace {

/* Slots for the n=2 one-row reflection chain.  A dual slot stores the
 * pre-dual vector; for n=2 dualization is the coordinate swap, and the
 * chain only ever needs the three slot patterns matched below. */
template <Semifield S>
struct TaggedSlot {
    bool is_dual = false;
    VecPoint<S> v;

    bool operator==(const TaggedSlot&) const = default;
};

template <Semifield S>
VecPoint<S> swap2(const VecPoint<S>& p) {
    return VecPoint<S>{2, {p.x[1], p.x[0]}};
}

/* R on two direct slots: rewrite the left argument pre-dual, apply the
 * (n-1,1) map, dualize the right output back */
template <Semifield S>
std::pair<VecPoint<S>, VecPoint<S>> r_direct(const VecPoint<S>& p, const VecPoint<S>& q) {
    auto [qt, pt] = geom_r_top(swap2(p), q);
    return {std::move(qt), swap2(pt)};
}

template <Semifield S>
void apply_geom_r_pair(std::vector<TaggedSlot<S>>& w) {
    TaggedSlot<S>& a = w[0];
    TaggedSlot<S>& b = w[1];
    if (a.is_dual && !b.is_dual) {
        auto [yt, xt] = geom_r_top(a.v, b.v);
        a = {false, std::move(yt)};
        b = {true, std::move(xt)};
    } else if (!a.is_dual && !b.is_dual) {
        auto [qt, pt] = r_direct(a.v, b.v);
        a = {false, std::move(qt)};
        b = {false, std::move(pt)};
    } else if (a.is_dual && b.is_dual) {
        auto [bt, ct] = r_direct(b.v, a.v);
        a = {true, std::move(ct)};
        b = {true, std::move(bt)};
    } else {
        throw std::logic_error("geometric reflection chain hit the direct,dual slot pattern");
    }
}

template <Semifield S>
void apply_geom_k_first(std::vector<TaggedSlot<S>>& w) {
    if (w[0].is_dual) throw std::logic_error("geometric K applied to a dual slot");
    w[0] = {true, geom_k1(w[0].v)};
}

template <Semifield S>
std::string slots_text(const std::vector<TaggedSlot<S>>& w) {
    std::string out;
    for (size_t m = 0; m < w.size(); ++m) {
        if (m) out += " x ";
        out += (w[m].is_dual ? "dual" : "") + vec_text(w[m].v);
    }
    return out;
}

template <Semifield S>
bool reflection_n2_case(const VecPoint<S>& x, const VecPoint<S>& y, std::string& detail) {
    std::vector<TaggedSlot<S>> lhs = {{false, x}, {false, y}};
    std::vector<TaggedSlot<S>> rhs = lhs;
    apply_geom_k_first(lhs);
    apply_geom_r_pair(lhs);
    apply_geom_k_first(lhs);
    apply_geom_r_pair(lhs);

    apply_geom_r_pair(rhs);
    apply_geom_k_first(rhs);
    apply_geom_r_pair(rhs);
    apply_geom_k_first(rhs);

    if (lhs == rhs) return true;
    detail = "x=" + vec_text(x) + " y=" + vec_text(y) + ": left " + slots_text(lhs) + ", right " + slots_text(rhs);
    return false;
}

} /* namespace */

VerifierReport verify_geom_reflection_n2(int samples, uint64_t seed, int grid_radius) {
    const Stopwatch sw;
    VerifierReport rep;
    rep.label = "geom-reflection-n2 samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                " grid=[-" + std::to_string(grid_radius) + "," + std::to_string(grid_radius) + "]^4";
    size_t dropped = 0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> draw(1, 100);
    for (int trial = 0; trial < samples; ++trial) {
        const auto coord = [&] { return PosRational(draw(rng), draw(rng)); };
        const VecPoint<PosRational> x{2, {coord(), coord()}};
        const VecPoint<PosRational> y{2, {coord(), coord()}};
        std::string detail;
        ++rep.checked;
        if (!reflection_n2_case(x, y, detail)) push_failure(rep, dropped, "rational " + detail);
    }

    for (int a = -grid_radius; a <= grid_radius; ++a) {
        for (int b = -grid_radius; b <= grid_radius; ++b) {
            for (int c = -grid_radius; c <= grid_radius; ++c) {
                for (int d = -grid_radius; d <= grid_radius; ++d) {
                    const VecPoint<TropInt> x{2, {TropInt(a), TropInt(b)}};
                    const VecPoint<TropInt> y{2, {TropInt(c), TropInt(d)}};
                    std::string detail;
                    ++rep.checked;
                    if (!reflection_n2_case(x, y, detail)) push_failure(rep, dropped, "tropical " + detail);
                }
            }
        }
    }
    seal(rep, dropped, sw);
    return rep;
}

VerifierReport verify_positivity(const std::string& map_id, int samples, uint64_t seed) {
    const Stopwatch sw;
    if (map_id != "r-top" && map_id != "k1" && map_id != "k2n5")
        throw std::invalid_argument("verify_positivity: unknown map '" + map_id + "' (use r-top, k1 or k2n5)");

    VerifierReport rep;
    rep.label = "positivity " + map_id + " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    size_t dropped = 0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> draw(1, 1000);
    const PosRational one(1);
    const PosRational huge(int64_t(1) << 30);
    const PosRational tiny(1, int64_t(1) << 30);

    /* per-coordinate draw streams: samples random draws, then the
     * deterministic all-ones / 2^{+-30} stress rows */
    const auto coord_for = [&](int trial, size_t position) -> PosRational {
        switch (trial - samples) {
            case 0: return one;
            case 1: return huge;
            case 2: return tiny;
            case 3: return position % 2 == 0 ? huge : tiny;
            default: return PosRational(draw(rng), draw(rng));
        }
    };
    const auto positive = [](const PosRational& v) { return v.value() > 0; };

    for (int trial = 0; trial < samples + 4; ++trial) {
        bool ok = true;
        std::string what;
        if (map_id == "r-top") {
            VecPoint<PosRational> x{3, {coord_for(trial, 0), coord_for(trial, 1), coord_for(trial, 2)}};
            VecPoint<PosRational> y{3, {coord_for(trial, 3), coord_for(trial, 4), coord_for(trial, 5)}};
            const auto [yt, xt] = geom_r_top(x, y);
            for (const auto& v : xt.x) ok = ok && positive(v);
            for (const auto& v : yt.x) ok = ok && positive(v);
            what = "x=" + vec_text(x) + " y=" + vec_text(y);
        } else if (map_id == "k1") {
            VecPoint<PosRational> x{3, {coord_for(trial, 0), coord_for(trial, 1), coord_for(trial, 2)}};
            for (const auto& v : geom_k1(x).x) ok = ok && positive(v);
            what = "x=" + vec_text(x);
        } else {
            GeomPoint<PosRational> p;
            p.n = 5;
            p.k = 2;
            size_t position = 0;
            for (int i = 1; i <= 2; ++i)
                for (int j = i; j <= i + 2; ++j) p.x[{i, j}] = coord_for(trial, position++);
            p.s = coord_for(trial, position);
            const GeomPoint<PosRational> out = geom_k2_n5(p);
            for (const auto& [ij, v] : out.x) ok = ok && positive(v);
            ok = ok && positive(out.s);
            what = "s=" + p.s.str();
        }
        ++rep.checked;
        if (!ok) push_failure(rep, dropped, map_id + " produced a non-positive output on " + what);
    }
    seal(rep, dropped, sw);
    return rep;
}

} /* namespace krc */
