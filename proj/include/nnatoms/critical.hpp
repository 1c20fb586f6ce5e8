#ifndef NNATOMS_CRITICAL_HPP
#define NNATOMS_CRITICAL_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nnatoms/atoms.hpp"
#include "nnatoms/rational.hpp"
#include "nnatoms/spectral.hpp"

namespace nnatoms {

/// Atoms of radius rho(T), the order among them and a basis of the
/// generalized eigenspace at rho(T).
struct CriticalStructure {
    double rho = 0.0;
    std::vector<std::size_t> atoms;    // canonical atom indices
    std::vector<Cover> covers;         // covers of the order restricted to `atoms`
    std::vector<std::size_t> heights;  // aligned with `atoms`
    std::size_t ascent = 0;
    std::vector<Eigen::VectorXd> basis;  // w_A, aligned with `atoms`
    /// T w_A = sum_B M(A, B) w_B, rows and columns aligned with `atoms`.
    Eigen::MatrixXd basis_matrix;
    /// Measured index of each w_A; should equal its height.
    std::vector<std::size_t> indices;
    bool indices_match_heights = false;
    bool borderline = false;
};

/// Atoms with |rho(A) - rho(T)| <= atol. Empty when rho(T) = 0.
std::vector<std::size_t> critical_atoms(const SpectralProfile& profile);

/// Full analysis. InputError when rho(T) = 0.
CriticalStructure analyze_critical(const SpectralProfile& profile);

/// Basis vectors for the given critical atoms: eigenfunction_w for
/// distinguished atoms, otherwise the minimal-norm vector of
/// ker (T_F - rho I)^c with F = F(A), c the number of critical atoms in F,
/// that agrees with v_A on A.
std::vector<Eigen::VectorXd> generalized_basis(const SpectralProfile& profile, const std::vector<std::size_t>& atoms);

/// Coefficient matrix of T in the basis, M(a, b) being the coefficient of
/// basis[b] in T basis[a]. NumericalError when the span is not T-invariant or
/// the family is dependent.
Eigen::MatrixXd basis_matrix(const Eigen::MatrixXd& t, const std::vector<Eigen::VectorXd>& basis);

/// Checks M(A,A) = rho, M(A,B) = 0 unless B ⪯ A, and M(A,B) >= cover_floor
/// on covers among `atoms`. Tolerances are relative to rho. Throws
/// InvariantViolation on the first failure.
void verify_basis_matrix(const SpectralProfile& profile, const std::vector<std::size_t>& atoms,
                         const Eigen::MatrixXd& m, double zero_tol = 1e-9, double cover_floor = 1e-9);

/// Least k >= 1 with |(T - rho I)^k w| <= 1e-8 |w| |T|^k (sup norms).
/// NumericalError when no k <= n + 1 works.
std::size_t vector_index(const Eigen::MatrixXd& t, double rho, const Eigen::VectorXd& w);

/// Least k >= 0 with rank (T - rho I)^k = rank (T - rho I)^(k+1), exactly.
std::size_t ascent_exact(const RationalMatrix& t, const Rational& rho);

/// Same quantity from numerical kernel dimensions of successive powers,
/// grown one step at a time. Reliable only for well separated radii.
std::size_t ascent_numeric(const SpectralProfile& profile);

}  // namespace nnatoms

#endif  // NNATOMS_CRITICAL_HPP
