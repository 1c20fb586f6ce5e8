#ifndef NNATOMS_SPECTRAL_HPP
#define NNATOMS_SPECTRAL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nnatoms/atoms.hpp"
#include "nnatoms/matrix.hpp"
#include "nnatoms/rational.hpp"
#include "nnatoms/support_graph.hpp"

namespace nnatoms {

/// Numerical tolerances. `atol` is relative to rho(T) and `pos_tol` to the
/// sup norm of the vector whose support is being read.
struct Tolerances {
    double rtol = 1e-10;
    double atol = 1e-9;
    double pos_tol = 1e-12;
    double support_threshold = kDefaultSupportThreshold;
    /// Radius gaps in (atol / tie_band, atol * tie_band] are flagged borderline.
    double tie_band = 1e3;
    std::size_t max_iters = 1'000'000;
};

/// Perron root and vector of an irreducible nonzero block.
struct PerronPair {
    double radius = 0.0;
    Eigen::VectorXd vector;  // block coordinates, positive, unit 1-norm
    std::size_t iterations = 0;
    double gap = 0.0;        // final Collatz-Wielandt bracket width
};

/// Power iteration on B + cI (c the max row sum of B), which is primitive
/// when B is irreducible. Stops once the Collatz-Wielandt bracket
/// min_i (Bx)_i/x_i <= rho <= max_i (Bx)_i/x_i is tight to rtol * 1e-3,
/// or stalls below rtol. Throws NumericalError with the last estimate and
/// bracket width otherwise.
PerronPair perron_pair(const Eigen::MatrixXd& irreducible_block, const Tolerances& tol = {});

/// rho(T_block), taken as the largest Perron root among the atoms inside the
/// block. Zero for a block without cycles.
double spectral_radius(const NonnegativeMatrix& t, const IndexSet& block, const Tolerances& tol = {});
double spectral_radius(const NonnegativeMatrix& t, const Tolerances& tol = {});

struct AtomSpectrum {
    double rho = 0.0;
    bool nonzero = false;          // the atom carries a cycle
    Eigen::VectorXd perron;        // full length, supported on the atom; empty for zero atoms
    bool distinguished = false;
    bool critical = false;
    bool borderline = false;
};

/// Atoms, their order and per-atom spectral data for one matrix.
///
/// Float entries at or below the support threshold are zeroed before any
/// spectral work so that numerical supports agree with the support graph.
class SpectralProfile {
public:
    static SpectralProfile compute(const NonnegativeMatrix& t, const Tolerances& tol = {});

    const NonnegativeMatrix& matrix() const noexcept { return matrix_; }
    /// The thresholded double matrix used for all numerics.
    const Eigen::MatrixXd& values() const noexcept { return values_; }
    const SupportGraph& graph() const noexcept { return graph_; }
    const AtomPoset& poset() const noexcept { return poset_; }
    const Tolerances& tolerances() const noexcept { return tol_; }
    std::size_t size() const noexcept { return matrix_.size(); }

    double rho() const noexcept { return rho_; }
    /// Absolute radius tie tolerance, atol * rho(T).
    double atol() const noexcept { return atol_abs_; }
    const std::vector<AtomSpectrum>& atoms() const noexcept { return atoms_; }
    const AtomSpectrum& atom(std::size_t a) const { return atoms_[a]; }

    /// Radii equal within atol.
    bool same_radius(double x, double y) const;
    /// Gap inside the borderline band.
    bool tie_ambiguous(double x, double y) const;

    /// Atoms carrying a cycle, i.e. with rho(A) > 0.
    std::vector<std::size_t> nonzero_atoms() const;
    /// Distinguished atoms of radius lambda (within atol).
    std::vector<std::size_t> distinguished_atoms(double lambda) const;
    /// Distinct radii of distinguished atoms, decreasing.
    std::vector<double> distinguished_eigenvalues() const;
    /// Set when some radius comparison fell in the borderline band.
    bool ambiguous() const noexcept { return ambiguous_; }

private:
    NonnegativeMatrix matrix_ = NonnegativeMatrix::zero(1);
    Eigen::MatrixXd values_;
    SupportGraph graph_;
    AtomPoset poset_;
    Tolerances tol_;
    double rho_ = 0.0;
    double atol_abs_ = 0.0;
    std::vector<AtomSpectrum> atoms_;
    bool ambiguous_ = false;
};

/// v_A for a nonzero atom, full length. InputError for a zero atom.
Eigen::VectorXd perron_vector(const SpectralProfile& profile, std::size_t atom);

/// w_A = v_A + f with (rho(A) I - T_B) f = 1_B T v_A on B = F*(A).
/// Requires a distinguished atom (InputError otherwise).
Eigen::VectorXd eigenfunction_w(const SpectralProfile& profile, std::size_t atom);

struct EigenconeGenerator {
    std::size_t atom;
    Eigen::VectorXd w;
};

/// Generators {w_A : A distinguished of radius lambda}; empty when lambda is
/// not a distinguished eigenvalue.
std::vector<EigenconeGenerator> nonneg_eigencone(const SpectralProfile& profile, double lambda);

struct ConeCoefficient {
    std::size_t atom;
    double coefficient;
};

/// Coefficients c_A with v = sum c_A w_A, read off as c_A = sum_A v / sum_A v_A
/// and then checked by reconstruction. InputError when v is not a
/// nonnegative eigenvector for lambda; InvariantViolation when a coefficient
/// is negative beyond tolerance or the reconstruction misses.
std::vector<ConeCoefficient> decompose_nonneg_eigenvector(const SpectralProfile& profile, const Eigen::VectorXd& v,
                                                          double lambda);

/// Both sides of mult(lambda, T) = sum over atoms of mult(lambda, A).
struct SchwartzMultiplicity {
    std::size_t total = 0;
    std::vector<std::size_t> per_atom;  // canonical atom order
    std::size_t atom_sum = 0;
    bool consistent() const noexcept { return total == atom_sum; }
};

/// Exact backend only (InputError on float input or lambda == 0).
SchwartzMultiplicity schwartz_multiplicity(const NonnegativeMatrix& t, const Rational& lambda);

/// Number of atoms of radius rho(T). Requires rho(T) > 0.
std::size_t multiplicity_at_radius(const SpectralProfile& profile);

/// Rational r with |r - rho| <= 1e-9 rho that is an exact eigenvalue of the
/// exact matrix, searched among continued-fraction convergents with
/// denominator below 10^6. nullopt when none is found or n > 64.
std::optional<Rational> rational_radius(const NonnegativeMatrix& t, double rho);

struct MonatomicityEvidence {
    bool single_nonzero_atom = false;        // (i)
    bool unique_and_simple = false;          // (ii)
    bool unique_and_overlapping = false;     // (iii)
    std::size_t right_generators = 0;
    std::size_t left_generators = 0;
    std::size_t multiplicity_at_radius = 0;
    std::optional<IndexSet> support_intersection;
    bool ambiguous = false;
};

struct MonatomicityVerdict {
    bool is_monatomic = false;
    std::optional<IndexSet> nonzero_atom;
    std::optional<Eigen::VectorXd> right_u;
    std::optional<Eigen::VectorXd> left_v;
    MonatomicityEvidence evidence;
};

/// Evaluates the three equivalent conditions; InvariantViolation if they
/// disagree or if the monatomic case does not meet at the nonzero atom.
/// `left` is the profile of the transposed matrix. Requires rho(T) > 0.
MonatomicityVerdict classify_monatomic(const SpectralProfile& right, const SpectralProfile& left);
MonatomicityVerdict classify_monatomic(const NonnegativeMatrix& t, const Tolerances& tol = {});

/// (lambda I - T)^{-1} for lambda > rho(T) + atol; entrywise nonnegative.
Eigen::MatrixXd resolvent(const SpectralProfile& profile, double lambda);

}  // namespace nnatoms

#endif  // NNATOMS_SPECTRAL_HPP
