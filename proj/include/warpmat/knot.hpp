#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "warpmat/error.hpp"

namespace warpmat {

enum class Strand : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Strand opposite(Strand s) noexcept { return s == Strand::Over ? Strand::Under : Strand::Over; }
constexpr Sign opposite(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

/// One pass through a crossing while traversing the diagram.
struct Visit {
    int crossing = 0;  // 1..c
    Strand strand = Strand::Over;

    friend bool operator==(const Visit&, const Visit&) = default;
};

/// Edge e is the arc between visit e-1 and visit e (0-based visits, cyclic),
/// i.e. the arc entering visit e. Edge 0 therefore precedes the first visit.
struct EdgeIndex {
    int index = 0;
};

/// A cell of a (signed) warping degree sequence.
struct Cell {
    int value = 0;
    bool bar = false;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using LabeledSequence = std::vector<Cell>;

/// Over/under bitmask over crossings: bit i refers to crossing i+1.
using CrossingMask = std::uint64_t;

/// Maximum crossing number accepted by the matrix builders (2^c rows).
inline constexpr int kMaxMatrixCrossings = 20;

class KnotProjection;

/// Gauss data of an oriented knot diagram: the cyclic sequence of 2c visits
/// and one sign per crossing. Virtual (non-planar) data is accepted.
class OrientedKnotDiagram {
public:
    OrientedKnotDiagram() = default;
    /// signs[i] is the sign of crossing i+1. Throws Error on invariant failure.
    OrientedKnotDiagram(std::vector<Visit> visits, std::vector<Sign> signs);

    int crossings() const noexcept { return static_cast<int>(signs_.size()); }
    int length() const noexcept { return static_cast<int>(visits_.size()); }
    const std::vector<Visit>& visits() const noexcept { return visits_; }
    const std::vector<Sign>& signs() const noexcept { return signs_; }
    Sign sign(int crossing) const;
    int negative_crossings() const noexcept;

    friend bool operator==(const OrientedKnotDiagram&, const OrientedKnotDiagram&) = default;

private:
    std::vector<Visit> visits_;
    std::vector<Sign> signs_;
};

/// Double-occurrence word of crossing ids (over/under and signs forgotten).
class KnotProjection {
public:
    KnotProjection() = default;
    explicit KnotProjection(std::vector<int> word);

    int crossings() const noexcept { return static_cast<int>(word_.size() / 2); }
    const std::vector<int>& word() const noexcept { return word_; }

    friend bool operator==(const KnotProjection&, const KnotProjection&) = default;

private:
    std::vector<int> word_;
};

// Gauss code text: tokens (O|U)<id>(+|-), e.g. "O1+U2+O3+U1+O2+U3+".
// The Unicode minus sign (U+2212) is accepted in place of '-'.
OrientedKnotDiagram parse_gauss_code(std::string_view text);
std::string format_gauss_code(const OrientedKnotDiagram& d);

nlohmann::json to_json(const OrientedKnotDiagram& d);
OrientedKnotDiagram diagram_from_json(const nlohmann::json& j);

/// Number of crossings first met as an undercrossing when walking from `base`.
int warping_degree(const OrientedKnotDiagram& d, EdgeIndex base);

/// Warping degree of every edge; column j holds the label of edge j.
LabeledSequence warping_labels(const OrientedKnotDiagram& d);

/// As warping_labels, with a bar on the cell following each overpass of a
/// negative crossing (the cell after the last visit is cell 0).
LabeledSequence signed_labels(const OrientedKnotDiagram& d);

OrientedKnotDiagram crossing_change(const OrientedKnotDiagram& d, int crossing);
OrientedKnotDiagram change_all_crossings(const OrientedKnotDiagram& d);

KnotProjection underlying_projection(const OrientedKnotDiagram& d);

/// Flips every crossing whose bit is set in `mask` relative to `reference`.
OrientedKnotDiagram apply_assignment(const KnotProjection& p, const OrientedKnotDiagram& reference,
                                     CrossingMask mask);

/// Relabels crossings 1..c in order of first appearance.
OrientedKnotDiagram normalized(const OrientedKnotDiagram& d);
KnotProjection normalized(const KnotProjection& p);

OrientedKnotDiagram rotated(const OrientedKnotDiagram& d, int shift);

/// Equality of Gauss data up to crossing relabeling and choice of start visit.
bool same_diagram(const OrientedKnotDiagram& a, const OrientedKnotDiagram& b);
bool same_projection(const KnotProjection& a, const KnotProjection& b);

std::string to_string(const LabeledSequence& s);

}  // namespace warpmat
