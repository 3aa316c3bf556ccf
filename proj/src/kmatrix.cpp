#include "krc/kmatrix.hpp"

#include "krc/crystal.hpp"

#include <stdexcept>
#include <vector>

namespace krc {

RectTableau k_matrix(const RectTableau& b) {
    const TensorElem y = combinatorial_r(TensorElem{{dual(b), b}});
    if (y.factors[1] != dual(y.factors[0]))
        throw std::logic_error("k_matrix: R on b^vee (x) b did not produce a dual pair");
    return y.factors[1];
}

RectTableau k_matrix_one_row(const RectTableau& b) {
    if (b.rows != 1)
        throw std::invalid_argument("k_matrix_one_row: tableau has " + std::to_string(b.rows) +
                                    " rows, expected exactly one");
    const std::vector<int> m = content(b);
    RectTableau shifted;
    shifted.n = b.n;
    shifted.rows = 1;
    shifted.cols = b.cols;
    shifted.cells.reserve(static_cast<size_t>(b.cols));
    for (int j = 0; j < b.n; ++j) {
        const int mult = m[static_cast<size_t>((j + 1) % b.n)];
        shifted.cells.insert(shifted.cells.end(), static_cast<size_t>(mult), j + 1);
    }
    require_valid(shifted);
    return dual(shifted);
}

AffineElem affine_k(const AffineElem& zb) {
    const int h = energy_h(TensorElem{{dual(zb.t), zb.t}});
    return AffineElem{-zb.d - h, k_matrix(zb.t)};
}

} /* namespace krc */
