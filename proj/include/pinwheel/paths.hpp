#pragma once

// Admissible paths of spokes, their step vectors W_i, and the translated tiles.
//
// W_i is the traversal vector of spoke i, so 2 W_i = +-V_i and sums of 2 W_i are
// the psi displacements.

#include "billiards.hpp"
#include "strips.hpp"

#include <map>
#include <string>
#include <vector>

namespace pinwheel {

struct NotAdmissiblePair : std::runtime_error {
    NotAdmissiblePair(std::size_t v, std::size_t w)
        : std::runtime_error("vertex pair (" + std::to_string(v + 1) + ", " + std::to_string(w + 1) +
                             ") is not admissible") {}
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <ordered_field F>
struct AdmissiblePath {
    long a = 0, b = 0;              // a <= b < a + n
    std::vector<long> involved;     // traversed spoke indices, increasing
    std::vector<Vec2<F>> W;         // W[i - a] for i = a..b, zero when skipped
    std::vector<bool> flipped;      // per involved spoke: traversed against its orientation
    std::size_t v = 0, w = 0;       // first and last vertex

    std::size_t length() const { return involved.size(); }
    const Vec2<F>& W_at(long i) const { return W[static_cast<std::size_t>(i - a)]; }
    bool involves(long i) const {
        for (long k : involved)
            if (k == i) return true;
        return false;
    }

    std::string name(long n) const {
        return std::to_string(wrap_index(a, n)) + "->" + std::to_string(wrap_index(b, n));
    }
};

// Sum of 2 W_i for i = a..k.
template <ordered_field F>
Vec2<F> partial_displacement(const AdmissiblePath<F>& path, long k) {
    if (k < path.a - 1 || k > path.b) throw IndexOutOfRange("index " + std::to_string(k) + " outside the path");
    Vec2<F> s{};
    for (long i = path.a; i <= k; ++i) s = s + F(2) * path.W_at(i);
    return s;
}

template <ordered_field F>
Vec2<F> displacement(const AdmissiblePath<F>& path) { return partial_displacement(path, path.b); }

template <ordered_field F>
ConvexRegion<F> tile_translate(const AdmissiblePath<F>& path, const ConvexRegion<F>& tile, long k) {
    if (k < path.a || k > path.b) throw IndexOutOfRange("index " + std::to_string(k) + " outside the path");
    return tile.translated(partial_displacement(path, k));
}

// p_0 = v followed by p_k = v + sum_{i=a}^{k} 2 W_i for k = a..b.
template <ordered_field F>
std::vector<Point2<F>> apex_sequence(const PinwheelSystem<F>& sys, const AdmissiblePath<F>& path) {
    std::vector<Point2<F>> out{sys.vertex(path.v)};
    for (long k = path.a; k <= path.b; ++k) out.push_back(out.back() + F(2) * path.W_at(k));
    return out;
}

template <ordered_field F>
class PathSet {
public:
    PathSet() = default;

    // Walk from each start spoke along its orientation, taking the next spoke
    // (in cyclic index order) incident to the current endpoint. Special spokes
    // are skipped except as the final spoke; an ordinary spoke that is not
    // incident ends the walk. Odd prefixes that do not wrap are paths.
    explicit PathSet(const PinwheelSystem<F>& sys) : n_(sys.size()) {
        for (long a = 1; a <= n_; ++a) {
            const Spoke& first = sys.spoke(a);
            AdmissiblePath<F> cur;
            cur.a = cur.b = a;
            cur.involved = {a};
            cur.W = {sys.vertex(first.head) - sys.vertex(first.tail)};
            cur.flipped = {false};
            cur.v = first.tail;
            cur.w = first.head;
            add(cur);
            for (long j = a + 1; j < a + n_; ++j) {
                const Spoke& s = sys.spoke(j);
                if (!s.touches(cur.w)) {
                    if (!s.special) break;
                    continue;
                }
                std::size_t other = s.tail == cur.w ? s.head : s.tail;
                AdmissiblePath<F> next = cur;
                for (long i = cur.b + 1; i < j; ++i) next.W.push_back(Vec2<F>{});
                next.b = j;
                next.involved.push_back(j);
                next.W.push_back(sys.vertex(other) - sys.vertex(cur.w));
                next.flipped.push_back(s.head == cur.w);
                next.w = other;
                bool closes = next.w == next.v || (next.v == first.tail && next.w == first.head);
                if (s.special) {
                    if (next.length() % 2 == 1 && !closes) add(next);
                    continue;
                }
                cur = std::move(next);
                if (cur.length() % 2 == 1 && !closes) add(cur);
            }
        }
    }

    const std::vector<AdmissiblePath<F>>& paths() const { return paths_; }
    std::vector<AdmissiblePath<F>>& paths() { return paths_; }

    // The path whose tile carries label (v, w); the reversed pair of a single
    // spoke resolves to that spoke's path.
    const AdmissiblePath<F>& path_for_label(std::size_t v, std::size_t w) const {
        auto it = by_label_.find({v, w});
        if (it != by_label_.end()) return paths_[it->second];
        auto rev = by_label_.find({w, v});
        if (rev != by_label_.end() && paths_[rev->second].length() == 1) return paths_[rev->second];
        throw NotAdmissiblePair(v, w);
    }
    bool has_label(std::size_t v, std::size_t w) const {
        try {
            path_for_label(v, w);
            return true;
        } catch (const NotAdmissiblePair&) {
            return false;
        }
    }

    // Labels covered by the paths: (v, w) for every path and (w, v) for single spokes.
    std::vector<TileLabel> labels() const {
        std::vector<TileLabel> out;
        for (const auto& p : paths_) {
            out.push_back({p.v, p.w});
            if (p.length() == 1) out.push_back({p.w, p.v});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    long duplicates() const { return duplicates_; }

private:
    void add(const AdmissiblePath<F>& p) {
        auto key = std::make_pair(p.v, p.w);
        if (by_label_.count(key)) {
            ++duplicates_;
            return;
        }
        by_label_[key] = paths_.size();
        paths_.push_back(p);
    }

    long n_ = 0;
    long duplicates_ = 0;
    std::vector<AdmissiblePath<F>> paths_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_label_;
};

template <ordered_field F>
PathSet<F> enumerate_paths(const PinwheelSystem<F>& sys) { return PathSet<F>(sys); }

// Attach path ids to the tiles of a forward partition. Returns the number of
// tiles without a path.
template <ordered_field F>
std::size_t link_tiles(Partition<F>& part, const PathSet<F>& paths) {
    std::size_t missing = 0;
    for (auto& t : part.tiles()) {
        try {
            const auto& p = paths.path_for_label(t.label.v, t.label.w);
            t.path_a = p.a;
            t.path_b = p.b;
        } catch (const NotAdmissiblePair&) {
            ++missing;
        }
    }
    return missing;
}

}  // namespace pinwheel
