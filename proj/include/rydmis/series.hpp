#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rydmis::series {

/// Value in units of 𝒰 = C/d⁶ with a certified truncation bound.
struct SeriesValue {
    double value = 0;
    double tail_bound = 0;
    long terms_used = 0;
};

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

inline constexpr double kDefaultTol = 1e-12;

// Truncated forms take an explicit term count; tolerance forms pick the count.
SeriesValue F0_terms(int p, long terms);
SeriesValue F1_terms(int p, long terms);
SeriesValue F0(int p, double tol = kDefaultTol);
SeriesValue F1(int p, double tol = kDefaultTol);

/// Σ_{p≥from} F0(p) and Σ_{p≥from} [F0(p)+F1(p)] (infinite tails of the leg sequences).
SeriesValue sum_F0_from(int from, double tol = kDefaultTol);
SeriesValue sum_F0F1_from(int from, double tol = kDefaultTol);
/// Σ_{p≥from} [F1(p)+F0(p+1)].
SeriesValue sum_F1F0next_from(int from, double tol = kDefaultTol);

/// Closed-form bound on the interaction of one atom with all distant atoms (units of 𝒰).
SeriesValue e_dist_bound(int k);
/// Direct evaluation of the defining double sum, plus its truncation bound.
SeriesValue e_dist_raw(int k);

SeriesValue maximality_bound(double tol = kDefaultTol);
SeriesValue maximality_bound_terms(long terms);
SeriesValue domain_wall_merge_bound(double tol = kDefaultTol);
SeriesValue domain_wall_merge_bound_terms(long terms);
/// Partial sums of the merge bound's double series over i ≤ n (all j).
std::vector<double> merge_bound_partials(int n);

double zeta6_over_64();

// Finite-q structure sums (exact finite sums).
double I_C(int q);
double I_J(int q);
double open_sum(int q);       // Σ_{s≤q} (2s)^-6
double straight_sum(int q);   // Σ_{i≤2q} (2i)^-6
/// E_B^{1,0} − E_B^{0,0} for a segment of 2b atoms.
double b_segment_diff(int b);
/// Interaction part of E¹_A − E⁰_A for an irregular structure (legs of 2q atoms, φ).
double irregular_interaction_diff(int q, int phi);

SeriesValue I_C_limit();
SeriesValue I_J_limit();
SeriesValue b_segment_limit();

struct Constant {
    std::string name;
    SeriesValue v;
    std::string formula;
    std::optional<double> printed;    // digits quoted in the source text
    std::optional<double> limit_gap;  // finite-q entries: certified |limit − value|
};

class ConstantsTable {
public:
    void add(Constant c);
    const Constant& at(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    const std::vector<Constant>& entries() const { return entries_; }

private:
    std::vector<Constant> entries_;
    std::map<std::string, std::size_t> index_;
};

/// Limit constants (q → ∞) and the finite-q sums for the given q and φ.
ConstantsTable structure_constants(int q, int phi, double tol = kDefaultTol);

}  // namespace rydmis::series
