#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "ftre/layout.hpp"

namespace ftre {

/// Per-slice tile occupancy, indexed like Layout::grid.
using OccupancyMask = std::vector<char>;

namespace detail {

// BFS from src through free Routing tiles. Terminates on the first tile for
// which accept() is true (nearest target in hops). Returns the full path
// src..target inclusive, or nothing if no target is reachable.
template <typename AcceptFn>
std::optional<std::vector<TileCoord>> bfs_route(const Layout& layout,
                                                const OccupancyMask& occupied,
                                                TileCoord src, AcceptFn&& accept) {
    const int n = layout.tile_count();
    std::vector<std::int32_t> parent(static_cast<std::size_t>(n), -2);  // -2 unvisited
    std::deque<TileCoord> queue;
    parent[static_cast<std::size_t>(layout.index(src))] = -1;
    queue.push_back(src);

    while (!queue.empty()) {
        TileCoord cur = queue.front();
        queue.pop_front();
        const TileCoord neighbors[4] = {{cur.row - 1, cur.col}, {cur.row + 1, cur.col},
                                        {cur.row, cur.col - 1}, {cur.row, cur.col + 1}};
        for (const TileCoord& next : neighbors) {
            if (!layout.in_bounds(next)) continue;
            int idx = layout.index(next);
            if (parent[static_cast<std::size_t>(idx)] != -2) continue;
            if (occupied[static_cast<std::size_t>(idx)]) continue;
            parent[static_cast<std::size_t>(idx)] = layout.index(cur);
            if (accept(next)) {
                std::vector<TileCoord> path{next};
                for (int at = layout.index(cur); at != -1;
                     at = parent[static_cast<std::size_t>(at)])
                    path.push_back({at / layout.cols, at % layout.cols});
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (layout.at(next) == TileRole::Routing) queue.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Shortest merge route from src to dst: interior tiles are free Routing
/// tiles, endpoints included in the returned path. Absence is a value.
inline std::optional<std::vector<TileCoord>> route(const OccupancyMask& occupied,
                                                   TileCoord src, TileCoord dst,
                                                   const Layout& layout) {
    if (src == dst) return std::nullopt;
    if (occupied[static_cast<std::size_t>(layout.index(dst))]) return std::nullopt;
    return detail::bfs_route(layout, occupied, src,
                             [&](TileCoord c) { return c == dst; });
}

/// Shortest route from src to the nearest tile accepted by target(). Used to
/// fetch magic states from the closest storage tile holding one.
template <typename TargetFn>
std::optional<std::vector<TileCoord>> route_to_nearest(const OccupancyMask& occupied,
                                                       TileCoord src, const Layout& layout,
                                                       TargetFn&& target) {
    return detail::bfs_route(layout, occupied, src, std::forward<TargetFn>(target));
}

}  // namespace ftre
