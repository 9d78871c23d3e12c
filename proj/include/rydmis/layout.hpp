#pragma once

#include "rydmis/grid_drawing.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rydmis {

using Rational = boost::rational<long long>;

struct RationalPoint {
    Rational x;
    Rational y;

    bool operator==(const RationalPoint&) const = default;
};

Point to_point(const RationalPoint& p);
std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& s);

struct LayoutParams {
    int k = 8;
    int phi = 1;
    std::optional<int> q_override;  // defaults to ⌊k/8⌋

    LayoutParams() = default;
    LayoutParams(int k_, int phi_, std::optional<int> q = std::nullopt) : k(k_), phi(phi_), q_override(q) {}

    int q() const { return q_override ? *q_override : k / 8; }
    int g() const { return 2 * k + 1; }
    Rational D() const { return Rational(1) + Rational(1, 4 * phi); }
};

/// Throws StageError("arrange", ...) if k, φ or q are outside the supported window.
void check_params(const LayoutParams& p);

enum class AtomRole { original_vertex, grid_ancilla, leg_ancilla, irregular_vertex, segment_ancilla };
enum class SpecialKind { corner, junction, open_end, straight, irregular, isolated };

std::string to_string(AtomRole r);
std::string to_string(SpecialKind k);
AtomRole parse_role(const std::string& s);
SpecialKind parse_kind(const std::string& s);

struct Atom {
    RationalPoint pos;
    AtomRole role = AtomRole::segment_ancilla;
    int edge = -1;           // index into the drawing's edges, -1 for original vertices
    int vertex = -1;         // original vertex id, if any
    int special = -1;        // index into specials, if the atom is special
    int region = -1;         // region index (A regions first, then B regions)
};

struct Special {
    int atom = 0;
    SpecialKind kind = SpecialKind::isolated;
    int legs = 0;            // m_i
    int vertex = -1;         // original vertex, if any
};

/// Chain of atoms strictly between two consecutive specials along a drawn edge.
struct EffectiveEdge {
    int a = 0;               // special index at chain start
    int b = 0;               // special index at chain end
    int edge = 0;            // drawing edge index
    std::vector<int> chain;  // ordered from a to b
};

struct Region {
    std::string name;        // "A<i>" or "B<j>"
    bool is_a = true;
    int owner = 0;           // special index (A) or effective edge index (B)
    std::vector<int> atoms;
};

struct EdgeInfo {
    int u = 0;
    int v = 0;
    int length = 0;          // ℓ in grid units
    int ancillas = 0;        // 2 k_uv
    bool irregular = false;
    int kappa = 0;
    std::vector<int> chain;  // all atoms from u to v inclusive
};

struct AtomLayout {
    LayoutParams params;
    GridDrawing drawing;
    int vertex_count = 0;
    std::vector<Atom> atoms;
    std::vector<Special> specials;
    std::vector<EffectiveEdge> eff_edges;
    std::vector<Region> regions;
    std::vector<EdgeInfo> edges;

    int kappa_sum() const;
    std::vector<Point> points() const;
    /// Region of special i, and of effective edge e.
    const Region& a_region(int special) const { return regions[special]; }
    const Region& b_region(int eff_edge) const { return regions[specials.size() + eff_edge]; }
};

/// Blockade radius used for the layout's unit-disk graph: between D and √2.
inline constexpr double kLayoutRadius = 1.3;

/// Places atoms along a valid drawing; throws StageError("arrange", ...) on bad parameters or drawing.
AtomLayout arrange_atoms(const GridDrawing& d, const LayoutParams& p);

struct SpecialInfo {
    int atom = 0;
    SpecialKind kind = SpecialKind::isolated;
    int legs = 0;
};

/// Re-derives the kinds of all special atoms from atom geometry.
std::vector<SpecialInfo> classify_specials(const AtomLayout& layout);

struct SpecialCensus {
    int corners = 0;
    int junctions = 0;
    int open_ends = 0;
    int straight = 0;
    int irregular = 0;
    int isolated = 0;
};

SpecialCensus census(const AtomLayout& layout);

struct EffectiveGraph {
    Graph graph;             // vertices are special indices
    std::vector<int> kappa;  // per drawing edge
    int kappa_sum = 0;

    int a_prime(int a) const { return a + kappa_sum; }
};

EffectiveGraph effective_graph(const AtomLayout& layout);

UnitDiskGraph layout_udg(const AtomLayout& layout);

/// Audit of the layout invariants (spacing, parity, region partition).
ValidationReport audit_layout(const AtomLayout& layout);

/// Atoms with |B| odd; empty when every segment has even length.
std::vector<int> odd_segments(const AtomLayout& layout);

using SpinConfig = std::vector<char>;

struct DomainWallPolicy {
    int shift = 0;           // 0: walls centred in B; ±n: moved by n atom pairs
};

/// Ordered configuration for an independent set of the original graph.
/// Throws std::invalid_argument if the set is not independent.
SpinConfig encode_reference_config(const AtomLayout& layout, const std::vector<int>& mis,
                                   DomainWallPolicy policy = {});

/// Configuration of one effective edge's chain for pseudo-spins (sa, sb).
/// (0,0) places one wall inside B (centred plus shift); (1,1) leaves a double gap there.
std::vector<char> chain_sector(const AtomLayout& layout, int eff_edge, int sa, int sb, int shift = 0);

/// Ordered configuration of A region i's legs for pseudo-spin s (excludes the special itself).
std::vector<std::pair<int, char>> a_region_config(const AtomLayout& layout, int special, int s);

std::string layout_to_json(const AtomLayout& layout);
/// Re-derives the layout from the embedded drawing and parameters and checks the atom list.
AtomLayout parse_layout_json(const std::string& text);

}  // namespace rydmis
