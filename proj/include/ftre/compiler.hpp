#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftre/circuit.hpp"
#include "ftre/layout.hpp"
#include "ftre/routing.hpp"

namespace ftre {

// ---------------------------------------------------------------------------
// Compiled slice stream. A slice is one logical time-step; every operation
// within it must use disjoint tiles. Multi-slice operations appear once per
// slice they occupy (same gate index, same tiles).
// ---------------------------------------------------------------------------

enum class SliceOpKind : std::uint8_t { MergeRoute, PatchLocal, Idle };

struct SliceOp {
    SliceOpKind kind = SliceOpKind::Idle;
    std::uint32_t gate = 0;
    std::vector<TileCoord> tiles;  // MergeRoute: endpoint-to-endpoint path; PatchLocal: one tile
    std::uint8_t magic_consumed = 0;

    friend bool operator==(const SliceOp&, const SliceOp&) = default;
};

struct Slice {
    std::uint64_t index = 0;
    std::vector<SliceOp> ops;

    friend bool operator==(const Slice&, const Slice&) = default;
};

enum class TCorrectionPolicy : std::uint8_t {
    EvenOrdinal,   // every 2nd, 4th, ... T gate pays the correction (50% aggregate)
    Always,
    Never,
    SeededRandom,
};

struct GateTimings {
    int h_slices = 3;             // Hadamard: three consecutive slices on its tile
    int s_slices = 2;             // S / Sdg via twist-based Y-state initialization
    int cx_slices = 2;            // two merges through a shared routing region
    int t_merge_slices = 1;       // one ZZ merge to a stored magic state
    int s_correction_slices = 2;  // merge-free correction following a T
    int pauli_slices = 1;         // X / Y / Z occupy their tile for one slice
};

struct CompileOptions {
    TCorrectionPolicy t_correction = TCorrectionPolicy::EvenOrdinal;
    std::uint64_t correction_seed = 0;  // SeededRandom policy only
    GateTimings timings{};
    std::uint64_t stall_limit_floor = 16;
};

/// New magic states granted at the start of a slice. A null callback means
/// unconstrained supply (factory planning happens after compilation).
using MagicAvailability = std::function<std::uint64_t(std::uint64_t slice)>;

struct CompilationResult {
    std::uint64_t num_slices = 0;
    std::vector<Slice> slices;
    std::vector<std::uint32_t> profile;  // magic states consumed per slice
    double active_volume = 0.0;          // tile-slices, idling data qubits included
    std::uint32_t layout_tiles = 0;
    std::uint32_t num_lq = 0;
};

namespace detail {

inline std::vector<char> plan_t_corrections(const LogicalCircuit& circuit,
                                            const CompileOptions& options) {
    std::size_t t_count = 0;
    for (const Gate& g : circuit.gates)
        if (is_t_like(g.kind)) ++t_count;
    std::vector<char> corrected(t_count, 0);
    std::mt19937_64 rng(options.correction_seed);
    for (std::size_t ordinal = 1; ordinal <= t_count; ++ordinal) {
        switch (options.t_correction) {
            case TCorrectionPolicy::EvenOrdinal: corrected[ordinal - 1] = (ordinal % 2 == 0); break;
            case TCorrectionPolicy::Always:      corrected[ordinal - 1] = 1; break;
            case TCorrectionPolicy::Never:       corrected[ordinal - 1] = 0; break;
            case TCorrectionPolicy::SeededRandom: corrected[ordinal - 1] = (rng() & 1u); break;
        }
    }
    return corrected;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Greedy slice-by-slice scheduler. At each slice, DAG-ready gates are visited
// in ascending index and admitted when their tiles and a vertex-disjoint
// route are free for the gate's full duration. No backtracking; identical
// inputs give identical slice streams.
// ---------------------------------------------------------------------------

inline CompilationResult compile_circuit(const LogicalCircuit& circuit, const Layout& layout,
                                         const CompileOptions& options = {},
                                         const MagicAvailability& availability = {}) {
    if (layout.data_positions.size() < circuit.qubit_count)
        throw std::invalid_argument("compile_circuit: layout has " +
                                    std::to_string(layout.data_positions.size()) +
                                    " data tiles, circuit needs " +
                                    std::to_string(circuit.qubit_count));

    CompilationResult result;
    result.layout_tiles = static_cast<std::uint32_t>(layout.tile_count());
    result.num_lq = circuit.qubit_count;
    if (circuit.gates.empty()) return result;

    const DependencyDag dag = build_dag(circuit);
    const std::vector<char> corrected = detail::plan_t_corrections(circuit, options);
    const GateTimings& tm = options.timings;

    const std::size_t gate_count = circuit.gates.size();
    std::vector<char> scheduled(gate_count, 0);
    std::vector<std::uint64_t> earliest_start(gate_count, 0);
    std::vector<std::uint32_t> preds_left(gate_count, 0);
    for (std::size_t i = 0; i < gate_count; ++i)
        preds_left[i] = static_cast<std::uint32_t>(dag.preds[i].size());

    // Occupancy window for the current slice and the two after it (the
    // longest operation spans three slices).
    constexpr int kWindow = 3;
    std::vector<OccupancyMask> window(
        kWindow, OccupancyMask(static_cast<std::size_t>(layout.tile_count()), 0));

    auto mark = [&](int offset, TileCoord c) {
        window[static_cast<std::size_t>(offset)][static_cast<std::size_t>(layout.index(c))] = 1;
    };
    auto free_at = [&](int offset, TileCoord c) {
        return !window[static_cast<std::size_t>(offset)][static_cast<std::size_t>(layout.index(c))];
    };

    auto record_op = [&](std::uint64_t slice, SliceOp op) {
        if (slice >= result.slices.size()) {
            std::size_t old = result.slices.size();
            result.slices.resize(slice + 1);
            for (std::size_t s = old; s < result.slices.size(); ++s)
                result.slices[s].index = s;
        }
        result.slices[slice].ops.push_back(std::move(op));
    };

    std::size_t remaining = gate_count;
    std::uint64_t slice = 0;
    std::uint64_t magic_pool = 0;
    std::uint64_t stall = 0;
    std::size_t next_t_ordinal = 0;  // index into corrected[], in circuit order
    std::uint64_t last_end = 0;

    std::optional<std::uint32_t> first_blocked;
    while (remaining > 0) {
        if (availability) magic_pool += availability(slice);
        bool admitted_any = false;
        first_blocked.reset();

        for (std::uint32_t i = 0; i < gate_count; ++i) {
            if (scheduled[i] || preds_left[i] > 0 || earliest_start[i] > slice) continue;
            const Gate& g = circuit.gates[i];
            const TileCoord home = layout.data_positions[g.q0];
            int duration = 0;
            bool placed = false;

            switch (g.kind) {
                case GateKind::H:
                case GateKind::S:
                case GateKind::Sdg:
                case GateKind::X:
                case GateKind::Y:
                case GateKind::Z: {
                    duration = (g.kind == GateKind::H) ? tm.h_slices
                               : (g.kind == GateKind::S || g.kind == GateKind::Sdg)
                                   ? tm.s_slices
                                   : tm.pauli_slices;
                    bool free = true;
                    for (int d = 0; d < duration; ++d) free = free && free_at(d, home);
                    if (!free) break;
                    for (int d = 0; d < duration; ++d) {
                        mark(d, home);
                        record_op(slice + static_cast<std::uint64_t>(d),
                                  SliceOp{SliceOpKind::PatchLocal, i, {home}, 0});
                    }
                    placed = true;
                    break;
                }
                case GateKind::T:
                case GateKind::Tdg: {
                    const bool needs_correction = corrected[next_t_ordinal] != 0;
                    duration = tm.t_merge_slices + (needs_correction ? tm.s_correction_slices : 0);
                    if (availability && magic_pool == 0) break;
                    bool free = true;
                    for (int d = 0; d < duration; ++d) free = free && free_at(d, home);
                    if (!free) break;
                    auto path = route_to_nearest(
                        window[0], home, layout, [&](TileCoord c) {
                            return layout.at(c) == TileRole::MagicStorage && free_at(0, c);
                        });
                    if (!path) break;
                    for (const TileCoord& c : *path) mark(0, c);
                    record_op(slice, SliceOp{SliceOpKind::MergeRoute, i, *path, 1});
                    for (int d = 1; d < duration; ++d) {
                        mark(d, home);
                        record_op(slice + static_cast<std::uint64_t>(d),
                                  SliceOp{SliceOpKind::PatchLocal, i, {home}, 0});
                    }
                    if (result.profile.size() <= slice) result.profile.resize(slice + 1, 0);
                    result.profile[slice] += 1;
                    if (availability) --magic_pool;
                    placed = true;
                    break;
                }
                case GateKind::CX: {
                    duration = tm.cx_slices;
                    const TileCoord target = layout.data_positions[g.q1];
                    bool free = true;
                    for (int d = 0; d < duration; ++d)
                        free = free && free_at(d, home) && free_at(d, target);
                    if (!free) break;
                    // the route is held for the full merge pair, so interior
                    // tiles must be free in every occupied slice
                    OccupancyMask combined = window[0];
                    for (int d = 1; d < duration; ++d)
                        for (std::size_t t = 0; t < combined.size(); ++t)
                            combined[t] = combined[t] | window[static_cast<std::size_t>(d)][t];
                    auto path = route(combined, home, target, layout);
                    if (!path) break;
                    for (int d = 0; d < duration; ++d) {
                        for (const TileCoord& c : *path) mark(d, c);
                        record_op(slice + static_cast<std::uint64_t>(d),
                                  SliceOp{SliceOpKind::MergeRoute, i, *path, 0});
                    }
                    placed = true;
                    break;
                }
            }

            if (placed) {
                scheduled[i] = 1;
                if (is_t_like(g.kind)) ++next_t_ordinal;
                --remaining;
                admitted_any = true;
                const std::uint64_t end = slice + static_cast<std::uint64_t>(duration) - 1;
                last_end = std::max(last_end, end);
                for (std::uint32_t succ : dag.succs[i]) {
                    --preds_left[succ];
                    earliest_start[succ] = std::max(earliest_start[succ], end + 1);
                }
            } else if (preds_left[i] == 0 && earliest_start[i] <= slice && !first_blocked) {
                first_blocked = i;
            }
        }

        if (remaining == 0) break;
        stall = admitted_any ? 0 : stall + 1;
        if (stall > std::max<std::uint64_t>(options.stall_limit_floor, 10 * (slice + 1))) {
            std::uint32_t culprit = first_blocked.value_or(0);
            throw compile_error("gate " + std::to_string(culprit) + " (" +
                                gate_name(circuit.gates[culprit].kind) +
                                ") unroutable after " + std::to_string(slice + 1) +
                                " slices; layout too congested or magic supply starved");
        }

        // advance one slice
        window.erase(window.begin());
        window.emplace_back(static_cast<std::size_t>(layout.tile_count()), 0);
        ++slice;
    }

    result.num_slices = last_end + 1;
    result.slices.resize(result.num_slices);
    for (std::size_t s = 0; s < result.slices.size(); ++s) result.slices[s].index = s;
    result.profile.resize(result.num_slices, 0);

    // Active volume: every data qubit accrues one tile-slice per slice
    // (computing or idling); merge routes add their non-data tiles.
    double extra = 0.0;
    for (const Slice& s : result.slices)
        for (const SliceOp& op : s.ops)
            if (op.kind == SliceOpKind::MergeRoute)
                for (const TileCoord& c : op.tiles)
                    if (layout.at(c) != TileRole::Data) extra += 1.0;
    result.active_volume =
        static_cast<double>(result.num_slices) * static_cast<double>(circuit.qubit_count) + extra;
    return result;
}

/// Compiled slices per logical layer of the input circuit (lattice surgery
/// time overhead of one layer).
inline double slices_per_layer(const CompilationResult& result, const CircuitSummary& summary) {
    double depth = summary.depth / summary.occurrences;
    if (depth < 1.0) throw std::invalid_argument("slices_per_layer: depth must be >= 1");
    return static_cast<double>(result.num_slices) / depth;
}

/// Compiled slices per input T gate; below 12 the direct scheme beats the
/// sequential Pauli-based baseline on computation time.
inline double slices_per_t(const CompilationResult& result, const CircuitSummary& summary) {
    double num_t = summary.num_t / summary.occurrences;
    if (num_t < 1.0) throw std::invalid_argument("slices_per_t: circuit has no T gates");
    return static_cast<double>(result.num_slices) / num_t;
}

}  // namespace ftre
