#pragma once

#include "rydmis/layout.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rydmis {

/// E(n) = Σ linear_v n_v + Σ_{v<w} pair(v,w) n_v n_w over binary n.
struct QuadraticModel {
    int n = 0;
    std::vector<double> linear;
    std::vector<double> pair;  // dense, symmetric, zero diagonal

    double J(int v, int w) const { return pair[static_cast<std::size_t>(v) * n + w]; }
    double energy(const SpinConfig& c) const;
};

/// True if a's sorted excited-atom list is lexicographically smaller than b's.
bool lex_less(const SpinConfig& a, const SpinConfig& b);

double energy_ud(const SpinConfig& c, const Graph& g, const std::vector<double>& delta, double U);
double energy_ud(const SpinConfig& c, const Graph& g, double delta, double U);

struct ToyParams {
    double U = 1.0;
    double W = 0.2;
    double r = 1.0;
    double R = 1.7;
    double delta = 0.5;
    double eps = 0.05;

    ValidationReport check() const;
};

double toy_interaction(double dist, const ToyParams& p);
double energy_toy(const SpinConfig& c, const std::vector<Point>& pts, const std::vector<double>& delta,
                  const ToyParams& p);
QuadraticModel toy_model(const std::vector<Point>& pts, const std::vector<double>& delta, const ToyParams& p);

/// Corner plus junction arrangement on the unit lattice.
struct ToyInstance {
    std::vector<Point> points;
    int junction = 0;
    int corner = 0;
    std::vector<int> junction_neighbors;
    std::vector<int> corner_neighbors;
};

/// Junction at the origin with legs of `left` and `right` atoms, a vertical leg of `up` atoms
/// to a corner, and an arm of `arm` atoms leaving the corner.
ToyInstance toy_corner_junction(int left = 3, int right = 3, int up = 3, int arm = 3);
std::vector<double> toy_uniform_detunings(const ToyInstance& t, const ToyParams& p);
/// Δ_J = Δ+W+3ε, Δ_C = Δ+W+2ε, their nearest neighbours Δ+W+ε.
std::vector<double> toy_repaired_detunings(const ToyInstance& t, const ToyParams& p);

struct Targets {
    double delta_eff = 0.3;
    double delta_b = 0.52;
    double delta_inf = 0.53;
};

struct DetunedInstance {
    AtomLayout layout;
    double C = 1.0;
    std::vector<double> delta;
    Targets targets;
};

double rydberg_pair(double C, const Point& a, const Point& b);
/// Direct O(N²) evaluation with compensated summation.
double energy_ryd(const SpinConfig& c, const DetunedInstance& inst);
QuadraticModel rydberg_model(const DetunedInstance& inst);
/// Largest nearest-neighbour spacing along the layout's chains.
double nn_spacing_max(const AtomLayout& layout);
/// C / D⁶ with D the largest nearest-neighbour spacing.
double delta_max(const DetunedInstance& inst);

enum class Strategy { full, is, sample };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SolveOptions {
    Strategy strategy = Strategy::full;
    int max_full = 34;
    long samples = 1000000;
    std::uint64_t seed = 20240611;
    int threads = 0;                 // 0: hardware concurrency
    long long node_budget = 4000000000LL;
};

struct Certificate {
    Strategy strategy = Strategy::full;
    bool exhaustive = true;
    std::string justification;
    long long evaluated = 0;
};

struct GroundState {
    SpinConfig config;
    double energy = 0;
    Certificate cert;
};

double tie_tolerance(int n);

/// Exact minimiser (full or is) or best sample. For Strategy::is the model's minimiser must be an
/// independent set of `blockade`; the caller states why in `justification`.
GroundState ground_state_exact(const QuadraticModel& m, const SolveOptions& opt, const Graph* blockade = nullptr,
                               const std::string& justification = "");

/// Solves a compiled instance; the is strategy is refused unless every Δ_v < Δ_max.
GroundState solve_instance(const DetunedInstance& inst, const SolveOptions& opt);

struct StructureEnergies {
    std::vector<std::array<double, 2>> a;   // E^s_{A_i}
    // Per effective edge, E_B for sectors (s_a, s_b) indexed 2*s_a + s_b.
    std::vector<std::array<double, 4>> b;
    // Cross terms E_{A_a,B} and E_{A_b,B} per sector.
    std::vector<std::array<double, 4>> ab_a;
    std::vector<std::array<double, 4>> ab_b;
};

/// Configuration of a whole sector: A_i in state s_i, every B in its (s_a, s_b) sector.
SpinConfig sector_config(const AtomLayout& layout, const std::vector<int>& s, int wall_shift = 0);

StructureEnergies structure_energies(const DetunedInstance& inst, int wall_shift = 0);

/// Σ_i E_{A_i} + Σ_B (E_{A_a,B} + E_{A_b,B} + E_B) for pseudo-spins s.
double decomposed_energy(const DetunedInstance& inst, const StructureEnergies& se, const std::vector<int>& s);

/// Energy of atoms in `atoms` (detuning plus internal pairs) under configuration c.
double region_energy(const DetunedInstance& inst, const std::vector<int>& atoms, const SpinConfig& c);
double cross_energy(const DetunedInstance& inst, const std::vector<int>& x, const std::vector<int>& y,
                    const SpinConfig& c);

struct DecodeResult {
    std::vector<int> s;        // per special
    std::vector<int> witness;  // original vertices with s = 1
    std::vector<std::string> diagnostics;

    bool clean() const { return diagnostics.empty(); }
};

DecodeResult decode(const SpinConfig& c, const AtomLayout& layout);

std::string config_to_string(const SpinConfig& c);
SpinConfig parse_config(const std::string& s, std::size_t n);

}  // namespace rydmis
