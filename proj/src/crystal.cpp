#include "krc/crystal.hpp"

#include "krc/promotion.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace krc {

CrystalShape shape_of(const RectTableau& t) { return {t.n, t.rows, t.cols}; }

CrystalShape dual_shape(CrystalShape s) { return {s.n, s.n - s.k, s.l}; }

namespace {

struct Signature {
    int eps = 0;
    int phi = 0;
    int e_pos = -1; /* word position of the leftmost surviving '+' */
    int f_pos = -1; /* word position of the rightmost surviving '-' */
};

Signature word_signature(int i, const std::vector<int>& word) {
    std::vector<std::pair<int, char>> stack; /* survivors: '-' entries precede '+' entries */
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        if (word[pos] == i + 1) {
            stack.emplace_back(pos, '+');
        } else if (word[pos] == i) {
            if (!stack.empty() && stack.back().second == '+')
                stack.pop_back();
            else
                stack.emplace_back(pos, '-');
        }
    }
    Signature s;
    for (const auto& [pos, sign] : stack) (sign == '+' ? s.eps : s.phi)++;
    if (s.eps > 0) s.e_pos = stack[static_cast<size_t>(s.phi)].first;
    if (s.phi > 0) s.f_pos = stack[static_cast<size_t>(s.phi) - 1].first;
    return s;
}

/* crystal_word position -> cell, inverting (c, r) -> c*rows + (rows-1-r) */
std::pair<int, int> cell_of_word_pos(const RectTableau& t, int pos) {
    const int c = pos / t.rows;
    const int r = t.rows - 1 - pos % t.rows;
    return {r, c};
}

RectTableau flip_letter(const RectTableau& t, int pos, int to) {
    RectTableau out = t;
    auto [r, c] = cell_of_word_pos(t, pos);
    out.at(r, c) = to;
    if (!is_semistandard(out)) throw std::logic_error("operator application broke semistandardness");
    return out;
}

void require_index(int i, int n) {
    if (i < 0 || i >= n) throw std::invalid_argument("operator index must lie in 0..n-1");
}

} /* namespace */

int eps(int i, const RectTableau& t) {
    require_index(i, t.n);
    if (i == 0) return eps(1, promotion(t));
    return word_signature(i, crystal_word(t)).eps;
}

int phi(int i, const RectTableau& t) {
    require_index(i, t.n);
    if (i == 0) return phi(1, promotion(t));
    return word_signature(i, crystal_word(t)).phi;
}

std::optional<RectTableau> apply_e(int i, const RectTableau& t) {
    require_index(i, t.n);
    if (i == 0) {
        auto up = apply_e(1, promotion(t));
        if (!up) return std::nullopt;
        return promotion_inverse(*up);
    }
    Signature s = word_signature(i, crystal_word(t));
    if (s.eps == 0) return std::nullopt;
    return flip_letter(t, s.e_pos, i);
}

std::optional<RectTableau> apply_f(int i, const RectTableau& t) {
    require_index(i, t.n);
    if (i == 0) {
        auto down = apply_f(1, promotion(t));
        if (!down) return std::nullopt;
        return promotion_inverse(*down);
    }
    Signature s = word_signature(i, crystal_word(t));
    if (s.phi == 0) return std::nullopt;
    return flip_letter(t, s.f_pos, i + 1);
}

namespace {

/* fold the factors' reduced blocks -^phi +^eps left to right; survivors keep their factor index */
struct TensorFold {
    int eps = 0;
    int phi = 0;
    int e_factor = -1;
    int f_factor = -1;
};

TensorFold tensor_fold(int i, const TensorElem& x) {
    std::vector<std::pair<int, char>> stack;
    for (int m = 0; m < static_cast<int>(x.factors.size()); ++m) {
        const int fm = phi(i, x.factors[m]);
        const int em = eps(i, x.factors[m]);
        for (int j = 0; j < fm; ++j) {
            if (!stack.empty() && stack.back().second == '+')
                stack.pop_back();
            else
                stack.emplace_back(m, '-');
        }
        for (int j = 0; j < em; ++j) stack.emplace_back(m, '+');
    }
    TensorFold f;
    for (const auto& [m, sign] : stack) (sign == '+' ? f.eps : f.phi)++;
    if (f.eps > 0) f.e_factor = stack[static_cast<size_t>(f.phi)].first;
    if (f.phi > 0) f.f_factor = stack[static_cast<size_t>(f.phi) - 1].first;
    return f;
}

void require_tensor(const TensorElem& x) {
    if (x.factors.empty()) throw std::invalid_argument("empty tensor element");
    for (const auto& t : x.factors)
        if (t.n != x.factors.front().n) throw std::invalid_argument("tensor factors disagree on the alphabet");
}

} /* namespace */

int eps(int i, const TensorElem& x) {
    require_tensor(x);
    return tensor_fold(i, x).eps;
}

int phi(int i, const TensorElem& x) {
    require_tensor(x);
    return tensor_fold(i, x).phi;
}

std::optional<TensorElem> apply_e(int i, const TensorElem& x) {
    require_tensor(x);
    TensorFold f = tensor_fold(i, x);
    if (f.eps == 0) return std::nullopt;
    auto up = apply_e(i, x.factors[static_cast<size_t>(f.e_factor)]);
    if (!up) throw std::logic_error("acting factor rejected e despite a surviving '+'");
    TensorElem out = x;
    out.factors[static_cast<size_t>(f.e_factor)] = std::move(*up);
    return out;
}

std::optional<TensorElem> apply_f(int i, const TensorElem& x) {
    require_tensor(x);
    TensorFold f = tensor_fold(i, x);
    if (f.phi == 0) return std::nullopt;
    auto down = apply_f(i, x.factors[static_cast<size_t>(f.f_factor)]);
    if (!down) throw std::logic_error("acting factor rejected f despite a surviving '-'");
    TensorElem out = x;
    out.factors[static_cast<size_t>(f.f_factor)] = std::move(*down);
    return out;
}

std::vector<int> weight(const TensorElem& x) {
    require_tensor(x);
    std::vector<int> w(static_cast<size_t>(x.factors.front().n), 0);
    for (const auto& t : x.factors) {
        std::vector<int> c = content(t);
        for (size_t j = 0; j < w.size(); ++j) w[j] += c[j];
    }
    return w;
}

bool is_classical_highest(const TensorElem& x) {
    const int n = x.factors.front().n;
    for (int i = 1; i < n; ++i)
        if (eps(i, x) > 0) return false;
    return true;
}

std::pair<TensorElem, std::vector<int>> to_highest(TensorElem x) {
    require_tensor(x);
    const int n = x.factors.front().n;
    std::vector<int> trace;
    for (int i = 1; i < n;) {
        auto up = apply_e(i, x);
        if (up) {
            x = std::move(*up);
            trace.push_back(i);
            i = 1;
        } else {
            ++i;
        }
    }
    return {std::move(x), std::move(trace)};
}

namespace {

using HighestMap = std::map<std::vector<int>, TensorElem>;

const HighestMap& highest_map(CrystalShape left, CrystalShape right) {
    static std::mutex mu;
    static std::map<std::pair<CrystalShape, CrystalShape>, HighestMap> cache;
    std::scoped_lock lock(mu);
    auto [it, inserted] = cache.try_emplace({left, right});
    if (inserted) {
        if (left.n != right.n) throw std::invalid_argument("shape pair disagrees on the alphabet");
        for (const RectTableau& a : enumerate_crystal(left.n, left.k, left.l))
            for (const RectTableau& b : enumerate_crystal(right.n, right.k, right.l)) {
                TensorElem x{{a, b}};
                if (!is_classical_highest(x)) continue;
                auto [wit, fresh] = it->second.try_emplace(weight(x), x);
                if (!fresh)
                    throw std::logic_error("two classical highest elements share the weight in " +
                                           to_text(wit->second) + " / " + to_text(x));
            }
    }
    return it->second;
}

} /* namespace */

TensorElem classical_highest_of_weight(CrystalShape left, CrystalShape right, const std::vector<int>& mu) {
    const HighestMap& m = highest_map(left, right);
    auto it = m.find(mu);
    if (it == m.end()) throw std::logic_error("no classical highest element of the requested weight");
    return it->second;
}

std::string to_text(const TensorElem& x) {
    std::string s;
    for (size_t m = 0; m < x.factors.size(); ++m) {
        if (m) s += '|';
        s += to_text(x.factors[m]);
    }
    return s;
}

TensorElem tensor_from_text(int n, const std::string& text) {
    TensorElem x;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '|')) x.factors.push_back(rect_from_text(n, part));
    require_tensor(x);
    return x;
}

} /* namespace krc */
