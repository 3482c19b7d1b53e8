#ifndef HWIG_SCENARIO_HPP
#define HWIG_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hwig/heralding.hpp"
#include "hwig/reduction.hpp"

namespace hwig {

enum class ScenarioKind { SubtractSqueezed, AddCoherent, AddThermal, AddVacuum };

enum class OutputFormat { Csv, Pgm };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& s);

/// One heralding experiment: initial state, squeezing / seeding
/// parameters, detector overlap with the principal mode, grid and output
/// controls. Parsed from a key = value config file; flags override.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::SubtractSqueezed;
    int n_modes = 2;

    double squeeze_r = 0.5;
    double squeeze_phi = 0.0;
    // Optional second squeezed mode; r2 > 0 makes the subtracted state
    // genuinely four-dimensional.
    double squeeze_r2 = 0.0;
    double squeeze_phi2 = 0.0;

    Complex xi0 = Complex(1.0, 0.0); // coherent amplitude along the principal mode
    double tau = 5.0;                // thermal mean photon number

    // |<M, P>|^2 between the detector mode and the principal mode.
    double detector_overlap = 1.0;

    // Coupling strengths, only used for success-probability reporting.
    double zeta = 0.1;
    double xi_strength = 0.1;

    bool grid_auto = true;
    double grid_qmin = -4.0;
    double grid_qmax = 4.0;
    int grid_points = 161;
    int grid_points_4d = 41;

    std::string out_dir = "hwig-out";
    OutputFormat format = OutputFormat::Csv;
    bool write_full_4d = false;
    std::uint64_t seed = 0;
};

struct SweepSpec {
    std::string param; // tau, squeeze_r, detector_overlap, xi0_abs, xi_strength, zeta
    std::vector<double> values;
};

struct ParsedConfig {
    ScenarioConfig scenario;
    std::optional<SweepSpec> sweep;
};

ParsedConfig parse_config(const std::string& text);
ParsedConfig load_config_file(const std::string& path);
std::string serialize_config(const ParsedConfig& cfg);

/// Built-in configurations: fig3 (photon-added coherent state, |xi0| = 1),
/// fig4 (photon-added thermal state, tau = 5), sv-subtract (photon-
/// subtracted squeezed vacuum, r = 0.5).
ParsedConfig preset_config(const std::string& name);

struct ScenarioArtifacts {
    HeraldedState heralded;
    PolyGaussian reduced;
    ReducedWignerGrid grid;
    NegativityMetrics metrics;
    double norm_inverse = 0.0;
    double success_probability = 0.0;
    double normalization_residual = 0.0;
    double lo_overlap = 0.0; // principal mode vs first transformed detector mode
    std::vector<std::string> written_files;
};

/// Builds the configured input state and detector, applies the heralding
/// map, reduces, samples the grid, verifies normalization (NumericalError
/// beyond 1e-3) and, when out_dir is nonempty, writes grid + summary
/// artifacts. Deterministic across runs for identical configs.
ScenarioArtifacts run_scenario(const ScenarioConfig& cfg);

struct SweepRow {
    double value = 0.0;
    bool ok = false;
    std::string error;
    double min_value = 0.0;
    double argmin_q = 0.0;
    double argmin_p = 0.0;
    double negative_volume = 0.0;
    double norm_inverse = 0.0;
    double success_probability = 0.0;
    double lo_overlap = 0.0;
};

/// Runs the scenario once per sweep value (failed points are recorded and
/// the sweep continues) and writes sweep.csv.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base,
                                const SweepSpec& sweep);

std::string format_double(double v); // 17 significant digits, locale-free

} // namespace hwig

#endif
