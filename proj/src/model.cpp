#include "biotjkd/model.hpp"

#include <algorithm>
#include <numeric>

namespace biotjkd {

void PoleResidueModel::sort_by_pole_magnitude() {
    std::vector<std::size_t> order(poles.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return abs(poles[a]) < abs(poles[b]);
    });
    RVector p(poles.size()), r(poles.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        p[k] = poles[order[k]];
        r[k] = residues[order[k]];
    }
    poles = std::move(p);
    residues = std::move(r);
}

} // namespace biotjkd
