#pragma once

#include "krc/crystal.hpp"

#include <cstdint>
#include <string>
#include <vector>

/*
 * DOT export of a crystal graph or a tensor product of crystals: one
 * node per element labeled by its text form, one edge x -> f_i(x)
 * labeled i.
 */

namespace krc {

std::string export_dot(const std::vector<CrystalShape>& shapes, int64_t bound = 10000);

} /* namespace krc */
