#include "krc/graph.hpp"

#include "krc/catalog.hpp"
#include "krc/tableau.hpp"

#include <stdexcept>
#include <string>

namespace krc {

std::string export_dot(const std::vector<CrystalShape>& shapes, int64_t bound) {
    if (shapes.empty()) throw std::invalid_argument("export_dot: no factors given");
    Catalog& cat = Catalog::instance();
    std::vector<const ShapeTables*> tabs;
    tabs.reserve(shapes.size());
    for (const CrystalShape& s : shapes) tabs.push_back(&cat.shape(s));
    const ProductSpace space(tabs);
    if (space.size() > bound)
        throw std::invalid_argument("export_dot: " + std::to_string(space.size()) + " nodes exceed bound " +
                                    std::to_string(bound));

    const int n = shapes.front().n;
    std::string out = "digraph crystal {\n";
    for (int64_t x = 0; x < space.size(); ++x) {
        const auto parts = space.decode(x);
        std::string label;
        for (size_t m = 0; m < parts.size(); ++m) {
            if (m) label += '|';
            label += to_text(tabs[m]->elems[static_cast<size_t>(parts[m])]);
        }
        out += "  " + std::to_string(x) + " [label=\"" + label + "\"];\n";
    }
    for (int64_t x = 0; x < space.size(); ++x) {
        for (int i = 0; i < n; ++i) {
            const int64_t y = space.apply_f(i, x);
            if (y >= 0)
                out += "  " + std::to_string(x) + " -> " + std::to_string(y) + " [label=\"" + std::to_string(i) +
                       "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

} /* namespace krc */
