#ifndef NNATOMS_REPORT_HPP
#define NNATOMS_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nnatoms/atoms.hpp"
#include "nnatoms/matrix.hpp"
#include "nnatoms/spectral.hpp"

namespace nnatoms {

using Members = std::vector<std::size_t>;

struct AtomEntry {
    Members members;
    double rho = 0.0;
    bool nonzero = false;
    bool distinguished = false;
    bool critical = false;
    bool borderline = false;
    bool operator==(const AtomEntry&) const = default;
};

struct EigenconeEntry {
    double lambda = 0.0;
    std::vector<std::size_t> atoms;
    std::vector<std::vector<double>> generators;  // w_A, aligned with atoms
    bool operator==(const EigenconeEntry&) const = default;
};

struct MonatomicEntry {
    bool is_monatomic = false;
    std::optional<std::size_t> nonzero_atom;
    bool single_nonzero_atom = false;
    bool unique_and_simple = false;
    bool unique_and_overlapping = false;
    std::size_t right_generators = 0;
    std::size_t left_generators = 0;
    std::optional<Members> support_intersection;
    bool ambiguous = false;
    bool operator==(const MonatomicEntry&) const = default;
};

struct CriticalEntry {
    std::vector<std::size_t> atoms;
    std::vector<Cover> covers;
    std::vector<std::size_t> heights;
    std::size_t ascent = 0;
    std::vector<std::vector<double>> basis_matrix;
    std::vector<std::size_t> indices;
    bool indices_match_heights = false;
    std::optional<std::size_t> ascent_exact;
    bool operator==(const CriticalEntry&) const = default;
};

struct PeriodicityEntry {
    std::size_t atom = 0;
    std::size_t period = 0;
    std::size_t d = 0;
    std::vector<Members> classes;
    bool operator==(const PeriodicityEntry&) const = default;
};

struct OracleEntry {
    bool atom_characterizations_agree = false;
    std::size_t invariant_set_count = 0;
    bool invariant_sets_agree = false;
    bool reachability_agrees = false;
    std::optional<std::string> rational_rho;
    std::optional<std::size_t> exact_multiplicity;
    std::optional<bool> schwartz_consistent;
    bool operator==(const OracleEntry&) const = default;
};

struct ToleranceEntry {
    double rtol = 0.0;
    double atol = 0.0;
    double pos_tol = 0.0;
    double support_threshold = 0.0;
    double tie_band = 0.0;
    bool operator==(const ToleranceEntry&) const = default;
};

struct StructureReport {
    int schema = 1;
    std::string input;
    std::string backend;
    std::size_t n = 0;
    std::vector<AtomEntry> atoms;
    std::vector<Cover> covers;
    double rho = 0.0;
    bool ambiguous = false;
    std::vector<EigenconeEntry> eigencones;
    std::optional<std::size_t> multiplicity_at_radius;
    std::optional<MonatomicEntry> monatomic;
    std::optional<CriticalEntry> critical;
    /// Down-closed unions of atoms; listed when there are at most 16 atoms.
    std::optional<std::vector<Members>> invariant_sets;
    std::optional<std::size_t> power;
    std::vector<PeriodicityEntry> periodicity;
    std::optional<OracleEntry> oracle;
    ToleranceEntry tolerances;
    std::vector<std::string> warnings;
    bool operator==(const StructureReport&) const = default;
};

struct ReportOptions {
    std::string input = "matrix";
    Tolerances tolerances;
    std::optional<std::size_t> power;
    bool oracle = false;
};

/// Runs the whole pipeline. Invariant violations propagate as exceptions.
StructureReport build_report(const NonnegativeMatrix& t, const ReportOptions& options = {});

/// Deterministic JSON text (sorted keys, two-space indent, trailing newline).
/// Scalars are decimal strings on the exact backend.
std::string to_json(const StructureReport& report);
/// Inverse of to_json. InputError on malformed text or an unknown schema.
StructureReport from_json(const std::string& text);

/// Graphviz rendering of the atom order: one node per atom labeled with its
/// radius, thick outline for distinguished atoms, filled critical atoms,
/// edges from each atom to the atoms it covers.
std::string export_dot(const StructureReport& report);

}  // namespace nnatoms

#endif  // NNATOMS_REPORT_HPP
