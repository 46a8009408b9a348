#pragma once

// Everything derived from one polygon, built once and shared read-only.

#include "paths.hpp"

namespace pinwheel {

template <ordered_field F>
struct Model {
    NicePolygon<F> poly;
    PinwheelSystem<F> sys;
    Partition<F> forward;
    PathSet<F> paths;
    std::size_t unlinked = 0;  // forward tiles with no path; zero when the bijection holds

    explicit Model(NicePolygon<F> p)
        : poly(std::move(p)), sys(poly), forward(forward_partition(poly)), paths(sys) {
        unlinked = link_tiles(forward, paths);
    }

    long n() const { return sys.size(); }

    const Tile<F>& tile_of(const Point2<F>& p) const { return classify(poly, forward, p); }

    const AdmissiblePath<F>& path_of(const Tile<F>& t) const { return paths.path_for_label(t.label.v, t.label.w); }
};

}  // namespace pinwheel
