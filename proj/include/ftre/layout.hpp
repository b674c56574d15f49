#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ftre/errors.hpp"

namespace ftre {

enum class TileRole : std::uint8_t { Data, Routing, MagicStorage, YState, FactoryPort };

inline constexpr char role_char(TileRole r) {
    switch (r) {
        case TileRole::Data:         return 'D';
        case TileRole::Routing:      return '.';
        case TileRole::MagicStorage: return 'M';
        case TileRole::YState:       return 'Y';
        case TileRole::FactoryPort:  return 'P';
    }
    return '?';
}

enum class LayoutKind : std::uint8_t { SpbcLinear, OneLane, OneLaneCondensed };

inline constexpr const char* layout_kind_name(LayoutKind k) {
    switch (k) {
        case LayoutKind::SpbcLinear:       return "spbc-linear";
        case LayoutKind::OneLane:          return "1-lane";
        case LayoutKind::OneLaneCondensed: return "1-lane-condensed";
    }
    return "?";
}

struct TileCoord {
    int row = 0;
    int col = 0;
    friend bool operator==(const TileCoord&, const TileCoord&) = default;
    friend auto operator<=>(const TileCoord&, const TileCoord&) = default;
};

// ---------------------------------------------------------------------------
// A tile grid with role assignments. Tiles are the atomic spatial unit; one
// tile is one surface-code patch footprint.
//
//   SpbcLinear        2 x (num_lq + 2): a data row (plus one Y-state tile and
//                     one magic-storage tile) over a full routing row.
//   OneLane           3:1 routing:data in the bulk (2x2 cells, one data each),
//                     wrapped in a routing frame carrying ports and storage.
//   OneLaneCondensed  5:4 routing:data in the bulk (3x3 cells with a 2x2 data
//                     block each), same frame.
// ---------------------------------------------------------------------------

struct Layout {
    LayoutKind kind = LayoutKind::SpbcLinear;
    int rows = 0;
    int cols = 0;
    std::vector<TileRole> grid;                 // row-major
    std::vector<TileCoord> data_positions;      // qubit index -> coordinate
    std::vector<TileCoord> boundary_ports;
    std::vector<TileCoord> storage_positions;

    int tile_count() const { return rows * cols; }
    bool in_bounds(TileCoord c) const {
        return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols;
    }
    int index(TileCoord c) const { return c.row * cols + c.col; }
    TileRole at(TileCoord c) const { return grid[static_cast<std::size_t>(index(c))]; }
    TileRole& at(TileCoord c) { return grid[static_cast<std::size_t>(index(c))]; }
    bool on_boundary(TileCoord c) const {
        return c.row == 0 || c.row == rows - 1 || c.col == 0 || c.col == cols - 1;
    }
};

namespace detail {

// Spread num_storage (port, storage) tile pairs over the top and bottom frame
// rows. Pairs occupy two adjacent cells; spacing is even and deterministic.
inline void place_ports(Layout& layout, std::uint32_t num_storage) {
    if (num_storage == 0) return;
    std::uint32_t top = (num_storage + 1) / 2;
    std::uint32_t bottom = num_storage - top;
    auto place_row = [&](int row, std::uint32_t count) {
        if (count == 0) return;
        int usable = layout.cols - 1;  // pair start can sit in [0, cols-2]
        int prev_end = -2;
        for (std::uint32_t i = 0; i < count; ++i) {
            int c = static_cast<int>((static_cast<long long>(i) * 2 + 1) * usable / (2 * count)) - 1;
            c = std::max(c, prev_end + 2);
            if (c + 1 >= layout.cols) c = layout.cols - 2;
            layout.at({row, c}) = TileRole::FactoryPort;
            layout.at({row, c + 1}) = TileRole::MagicStorage;
            layout.boundary_ports.push_back({row, c});
            layout.storage_positions.push_back({row, c + 1});
            prev_end = c + 1;
        }
    };
    place_row(0, top);
    place_row(layout.rows - 1, bottom);
}

}  // namespace detail

/// Builds the requested layout, growing the grid to fit num_lq data tiles and
/// num_storage (port, storage) pairs. SpbcLinear has a fixed single storage
/// tile and ignores num_storage. Construction is deterministic.
inline Layout plan_layout(std::uint32_t num_lq, LayoutKind kind, std::uint32_t num_storage = 1) {
    if (num_lq == 0) throw std::invalid_argument("plan_layout: num_lq must be >= 1");
    Layout layout;
    layout.kind = kind;

    if (kind == LayoutKind::SpbcLinear) {
        int n = static_cast<int>(num_lq);
        layout.rows = 2;
        layout.cols = n + 2;
        layout.grid.assign(static_cast<std::size_t>(layout.tile_count()), TileRole::Routing);
        for (int q = 0; q < n; ++q) {
            layout.at({0, q}) = TileRole::Data;
            layout.data_positions.push_back({0, q});
        }
        layout.at({0, n}) = TileRole::YState;
        layout.at({0, n + 1}) = TileRole::MagicStorage;
        layout.storage_positions.push_back({0, n + 1});
        return layout;
    }

    // 1-lane family: data cells in an R x C bulk, routing frame around it.
    const bool condensed = (kind == LayoutKind::OneLaneCondensed);
    const int per_cell = condensed ? 4 : 1;  // data tiles per bulk cell
    const int cell = condensed ? 3 : 2;      // bulk cell side
    const std::uint32_t cells_needed = (num_lq + per_cell - 1) / per_cell;
    int cell_rows = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(cells_needed))));
    int cell_cols = static_cast<int>((cells_needed + cell_rows - 1) / cell_rows);
    // widen if the top/bottom frame rows cannot host the requested port pairs
    const int pairs_per_row = static_cast<int>((num_storage + 1) / 2);
    while (cell * cell_cols + 2 < pairs_per_row * 2)
        ++cell_cols;

    layout.rows = cell * cell_rows + 2;
    layout.cols = cell * cell_cols + 2;
    layout.grid.assign(static_cast<std::size_t>(layout.tile_count()), TileRole::Routing);

    std::uint32_t assigned = 0;
    for (int cr = 0; cr < cell_rows && assigned < num_lq; ++cr) {
        for (int cc = 0; cc < cell_cols && assigned < num_lq; ++cc) {
            // data sub-positions within one bulk cell (top-left corner of cell)
            for (int dr = 0; dr < (condensed ? 2 : 1) && assigned < num_lq; ++dr) {
                for (int dc = 0; dc < (condensed ? 2 : 1) && assigned < num_lq; ++dc) {
                    TileCoord c{1 + cr * cell + dr, 1 + cc * cell + dc};
                    layout.at(c) = TileRole::Data;
                    layout.data_positions.push_back(c);
                    ++assigned;
                }
            }
        }
    }

    detail::place_ports(layout, num_storage);
    return layout;
}

/// 4-neighbor grid adjacency, enumerated as an edge list (each edge once,
/// lexicographically smaller endpoint first).
inline std::vector<std::pair<TileCoord, TileCoord>> adjacency_edges(const Layout& layout) {
    std::vector<std::pair<TileCoord, TileCoord>> edges;
    for (int r = 0; r < layout.rows; ++r) {
        for (int c = 0; c < layout.cols; ++c) {
            if (c + 1 < layout.cols) edges.push_back({{r, c}, {r, c + 1}});
            if (r + 1 < layout.rows) edges.push_back({{r, c}, {r + 1, c}});
        }
    }
    return edges;
}

inline std::vector<TileCoord> tile_neighbors(const Layout& layout, TileCoord c) {
    std::vector<TileCoord> out;
    const TileCoord candidates[4] = {
        {c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
    for (const TileCoord& n : candidates)
        if (layout.in_bounds(n)) out.push_back(n);
    return out;
}

/// Structural invariant checks; returns human-readable violations (empty when
/// the layout is well formed).
inline std::vector<std::string> validate_layout(const Layout& layout) {
    std::vector<std::string> problems;
    auto coord_str = [](TileCoord c) {
        return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    };

    std::vector<TileCoord> sorted = layout.data_positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        problems.push_back("duplicate data positions");

    for (std::size_t q = 0; q < layout.data_positions.size(); ++q) {
        TileCoord c = layout.data_positions[q];
        if (!layout.in_bounds(c) || layout.at(c) != TileRole::Data) {
            problems.push_back("qubit " + std::to_string(q) + " not on a data tile");
            continue;
        }
        bool has_routing_neighbor = false;
        for (TileCoord n : tile_neighbors(layout, c))
            if (layout.at(n) == TileRole::Routing) has_routing_neighbor = true;
        if (!has_routing_neighbor)
            problems.push_back("data tile " + coord_str(c) + " has no routing neighbor");
    }

    for (int r = 0; r < layout.rows; ++r) {
        for (int c = 0; c < layout.cols; ++c) {
            TileRole role = layout.at({r, c});
            if ((role == TileRole::MagicStorage || role == TileRole::FactoryPort) &&
                !layout.on_boundary({r, c}))
                problems.push_back("magic entry tile " + coord_str({r, c}) +
                                   " not on the layout boundary");
        }
    }
    return problems;
}

inline std::string render_layout(const Layout& layout) {
    std::string out;
    out.reserve(static_cast<std::size_t>((layout.cols + 1) * layout.rows));
    for (int r = 0; r < layout.rows; ++r) {
        for (int c = 0; c < layout.cols; ++c) out += role_char(layout.at({r, c}));
        out += '\n';
    }
    return out;
}

}  // namespace ftre
