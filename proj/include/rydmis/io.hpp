#pragma once

#include "rydmis/compiler.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rydmis {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerifyOptions {
    LayoutParams params{8, 1};
    Targets targets;
    std::optional<GridDrawing> drawing;   // embed the graph when absent
    std::optional<Strategy> strategy;     // full up to kAutoFullAtoms atoms, then is
    SolveOptions solve;
};

inline constexpr std::size_t kAutoFullAtoms = 20;

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

struct VerifyReport {
    int mis_size = 0;                  // a = |MIS(𝒢)|
    std::vector<int> mis_witness;      // lexicographic witness from mis_exact
    int a_prime = 0;
    CompiledInstance compiled;
    GroundState ground;
    DecodeResult decoded;
    double threshold_a = 0;
    double threshold_a1 = 0;
    double predicted = 0;
    bool witness_is_lex = false;
    bool verdict_i = false;            // decoded witness is a maximum independent set of 𝒢
    bool verdict_ii = false;           // threshold(a+1) < E ≤ threshold(a)
    bool verdict_iii = false;          // |E − (ξ − a′Δ^eff)| ≤ η
    std::vector<StageTiming> timings;

    bool pass() const { return verdict_i && verdict_ii && verdict_iii && ground.cert.exhaustive; }
};

/// embed → arrange → compile → ground state → decode, with the three comparisons.
VerifyReport verify_instance(const PlanarGraph& g, const VerifyOptions& opt);
nlohmann::json verify_report_json(const VerifyReport& r, bool timings);

struct SvgOptions {
    double scale = 40;         // pixels per lattice unit
    bool blockade = false;     // draw blockade-radius circles
};

/// Deterministic SVG: atoms as circles, unit-disk links as gray segments, A regions shaded,
/// detunings (when given) on a colour ramp with a legend.
std::string render_svg(const AtomLayout& layout, const std::vector<double>* detunings = nullptr,
                       const SvgOptions& opt = {}, const std::string& note = "");

/// Subcommand, inputs, parameters, tool version and seed of one run.
struct RunManifest {
    std::string subcommand;
    std::vector<std::string> inputs;         // "path sha256" pairs
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;

    nlohmann::json to_json() const;
    /// SHA-256 of the canonical JSON dump.
    std::string hash() const;
};

std::string sha256_hex(const std::string& data);

}  // namespace rydmis
