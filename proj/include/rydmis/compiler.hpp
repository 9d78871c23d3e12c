#pragma once

#include "rydmis/energy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rydmis {

/// Leg detunings relative to Δ_∞ in units of 𝒰, indexed by distance x−1 from the special atom.
std::vector<double> leg_offsets_corner(int q);

struct JunctionLegs {
    std::vector<double> x;   // collinear leg
    std::vector<double> y;   // perpendicular leg, increments doubled
    std::vector<double> z;   // equal to x
};

JunctionLegs leg_offsets_junction(int q);

/// Limit of Δ_1 − Δ_∞ on a corner leg (units of 𝒰).
double corner_leg_max();

struct SpecialDetunings {
    double corner = 0;
    double junction = 0;
    double open_end = 0;
    double straight = 0;
    double irregular = 0;
};

/// Special-atom detunings from the analytic structure sums at finite q and a B segment of 2b atoms
/// (b ≤ 0: large-b limit). Units of 𝒰.
SpecialDetunings special_vertex_detunings(double delta_eff, int q, int phi = 1, int b = 0);
/// Asymptotic offsets Δ_X − Δ^eff for corner, junction, open end, straight.
SpecialDetunings limit_offsets();

struct WindowCheck {
    std::string name;
    double value = 0;
    double lo = 0;
    double hi = 0;
    bool ok = true;
    std::string remedy;
};

struct CompileReport {
    std::vector<WindowCheck> checks;
    bool footnote_active = false;    // 2φ < 2q ≤ k/4 holds
    std::string footnote;

    bool feasible() const;
    /// First failing check, empty when feasible.
    std::string binding() const;
};

struct EffectiveModel {
    EffectiveGraph eff;
    // Finite-q values: segment energies include the A–B cross terms of each sector.
    std::vector<double> delta_eff_i;   // per special
    std::vector<double> u_eff_ij;      // per effective edge
    // Region-only values E⁰_A − E¹_A − Σ(E^{1,0}_B − E^{0,0}_B) and E¹¹+E⁰⁰−E¹⁰−E⁰¹, for reporting.
    std::vector<double> delta_eff_region;
    std::vector<double> u_eff_region;
    double delta_eff = 0;              // target value
    double u_eff = 0;                  // smallest U^eff_ij
    double xi = 0;                     // exact energy of the canonical configuration
    double xi_decomposed = 0;          // Σ E⁰_A + Σ (E_AB + ½E⁰⁰_B)
    double xi_shifted = 0;             // canonical configuration with walls moved by one pair
    double eta = 0;                    // N · E_dist(k)
    double e_dist = 0;

    double homogeneity() const;
    /// −(a′ − ½)Δ^eff + ξ with a′ = a + Σκ.
    double threshold(int a) const;
    /// ξ − a′Δ^eff, the effective-model ground energy when |MIS| = a.
    double predicted_ground(int a) const;
};

struct CompiledInstance {
    DetunedInstance instance;
    EffectiveModel model;
    CompileReport report;
};

/// Effective model and window report for an instance whose detunings are already set.
CompiledInstance analyse(DetunedInstance inst);
/// Assigns detunings and computes the effective model. Never throws on window violations;
/// they are recorded in the report.
CompiledInstance compile_unchecked(const AtomLayout& layout, const Targets& targets);
/// As compile_unchecked, but throws StageError("compile", ...) naming the binding window.
CompiledInstance compile(const AtomLayout& layout, const Targets& targets);

/// Smallest φ ≤ phi_max whose compiled layout opens every window, if any.
std::optional<int> feasible_phi(const GridDrawing& d, int k, const Targets& targets, int phi_max = 16);

/// Conservative atom count for a graph with n vertices at parameter k.
long estimated_atoms(int n, int k);
/// Smallest k ≥ 2 with estimated_atoms(n, k) · E_dist(k) ≤ Δ^eff / (2 · safety).
int recommend_k(int n, double delta_eff, double safety = 1.0);

double threshold(int a, const EffectiveModel& m);

std::string instance_to_json(const CompiledInstance& ci);
/// Re-derives layout and effective model; throws StageError("parse", ...) on malformed input.
CompiledInstance parse_instance_json(const std::string& text);

}  // namespace rydmis
