#pragma once

#include <random>

#include "qgr/partitions.hpp"

namespace qgr::detail {

inline Rank random_rank(std::mt19937_64& rng, std::size_t dim) {
    return std::uniform_int_distribution<Rank>(0, dim - 1)(rng);
}

inline std::string ctx_label(const Grassmannian& g) {
    return "G(" + std::to_string(g.k()) + "," + std::to_string(g.n()) + ")";
}

inline std::string label(const Grassmannian& g, Rank r) { return "(" + format_parts(g.at(r)) + ")"; }

}  // namespace qgr::detail
