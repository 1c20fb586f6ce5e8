#include "nnatoms/critical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnatoms/error.hpp"
#include "nnatoms/oracle.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Orthonormal bases of ker S, ker S^2, ... computed one step at a time:
// x is in ker S^(j+1) iff S x lies in ker S^j. Working with S rather than its
// powers keeps the singular values on the scale of S.
std::vector<Eigen::MatrixXd> kernel_chain(const Eigen::MatrixXd& s, std::size_t max_steps) {
    const Index n = s.rows();
    const double tol = 1e-9 * std::max(1.0, s.cwiseAbs().rowwise().sum().maxCoeff()) * static_cast<double>(n);
    std::vector<Eigen::MatrixXd> chain;
    Eigen::MatrixXd q(n, 0);
    for (std::size_t step = 0; step < max_steps; ++step) {
        const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - q * q.transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj * s, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        Index rank = 0;
        for (Index i = 0; i < sv.size(); ++i) rank += sv(i) > tol ? 1 : 0;
        Eigen::MatrixXd next = svd.matrixV().rightCols(n - rank);
        chain.push_back(next);
        if (next.cols() == q.cols()) break;
        q = next;
    }
    return chain;
}

std::vector<std::size_t> members_of(const IndexSet& s) { return s.members(); }

}  // namespace

std::vector<std::size_t> critical_atoms(const SpectralProfile& profile) {
    std::vector<std::size_t> out;
    if (!(profile.rho() > 0.0)) return out;
    for (std::size_t a = 0; a < profile.atoms().size(); ++a) {
        if (profile.atom(a).critical) out.push_back(a);
    }
    return out;
}

std::vector<Eigen::VectorXd> generalized_basis(const SpectralProfile& profile, const std::vector<std::size_t>& atoms) {
    const Eigen::MatrixXd& t = profile.values();
    const double rho = profile.rho();
    const std::size_t n = profile.size();
    std::vector<Eigen::VectorXd> basis;

    for (std::size_t a : atoms) {
        const auto& spec = profile.atom(a);
        if (spec.distinguished) {
            basis.push_back(eigenfunction_w(profile, a));
            continue;
        }
        const IndexSet& atom = profile.poset().atom(a);
        const IndexSet future_set = future(profile.graph(), atom);
        std::size_t c = 0;
        for (std::size_t b : atoms) c += profile.poset().atom(b).is_subset_of(future_set) ? 1 : 0;

        const auto rows = members_of(future_set);
        const Index k = idx(rows.size());
        Eigen::MatrixXd s(k, k);
        for (Index i = 0; i < k; ++i) {
            for (Index j = 0; j < k; ++j) s(i, j) = t(idx(rows[i]), idx(rows[j]));
        }
        s.diagonal().array() -= rho;
        const auto chain = kernel_chain(s, c);
        const Eigen::MatrixXd& null = chain.back();
        if (static_cast<std::size_t>(null.cols()) != c) {
            throw NumericalError("generalized kernel on F(" + atom.to_string() + ") has dimension " +
                                 std::to_string(null.cols()) + ", expected " + std::to_string(c) +
                                 "; radius tie misclassified upstream");
        }

        // Rows of the kernel basis that sit on A, and v_A there.
        std::vector<Index> on_atom;
        for (Index i = 0; i < k; ++i) {
            if (atom.contains(rows[static_cast<std::size_t>(i)])) on_atom.push_back(i);
        }
        Eigen::MatrixXd na(idx(on_atom.size()), null.cols());
        Eigen::VectorXd va(idx(on_atom.size()));
        for (std::size_t r = 0; r < on_atom.size(); ++r) {
            na.row(idx(r)) = null.row(on_atom[r]);
            va(idx(r)) = spec.perron(idx(rows[static_cast<std::size_t>(on_atom[r])]));
        }
        // Columns of `null` are orthonormal, so the minimal-norm y is also the
        // minimal-norm x = null * y.
        const Eigen::VectorXd y = na.completeOrthogonalDecomposition().solve(va);
        if ((na * y - va).cwiseAbs().maxCoeff() > 1e-8 * va.cwiseAbs().maxCoeff()) {
            throw NumericalError("no generalized eigenvector restricts to v_A on " + atom.to_string());
        }
        const Eigen::VectorXd local = null * y;
        Eigen::VectorXd w = Eigen::VectorXd::Zero(idx(n));
        for (Index i = 0; i < k; ++i) w(idx(rows[static_cast<std::size_t>(i)])) = local(i);
        // Pin the atom block to v_A exactly.
        atom.for_each([&](std::size_t v) { w(idx(v)) = spec.perron(idx(v)); });
        basis.push_back(w);
    }
    return basis;
}

Eigen::MatrixXd basis_matrix(const Eigen::MatrixXd& t, const std::vector<Eigen::VectorXd>& basis) {
    if (basis.empty()) return Eigen::MatrixXd(0, 0);
    const Index n = t.rows();
    const Index c = idx(basis.size());
    Eigen::MatrixXd w(n, c);
    for (Index a = 0; a < c; ++a) w.col(a) = basis[static_cast<std::size_t>(a)];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
    qr.setThreshold(1e-10);
    if (qr.rank() != c) {
        throw NumericalError("generalized basis is linearly dependent (rank " + std::to_string(qr.rank()) + " of " +
                             std::to_string(c) + ")");
    }
    const Eigen::MatrixXd tw = t * w;
    const Eigen::MatrixXd x = qr.solve(tw);
    const double miss = (w * x - tw).cwiseAbs().maxCoeff();
    if (miss > 1e-8 * std::max(1.0, tw.cwiseAbs().maxCoeff())) {
        throw NumericalError("span of the generalized basis is not T-invariant (residual " + std::to_string(miss) + ")");
    }
    return x.transpose();
}

void verify_basis_matrix(const SpectralProfile& profile, const std::vector<std::size_t>& atoms,
                         const Eigen::MatrixXd& m, double zero_tol, double cover_floor) {
    const double rho = profile.rho();
    const auto& poset = profile.poset();
    IndexSet subset(poset.size());
    for (std::size_t a : atoms) subset.insert(a);
    const auto covers = covers_within(poset, subset);

    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double v = m(idx(i), idx(j));
            const std::string where = poset.atom(atoms[i]).to_string() + "," + poset.atom(atoms[j]).to_string();
            if (i == j) {
                if (std::abs(v - rho) > zero_tol * rho) {
                    throw InvariantViolation("basis-matrix-diagonal", "M(" + where + ") = " + std::to_string(v) +
                                                                          " differs from rho(T) = " + std::to_string(rho));
                }
            } else if (!poset.leq(atoms[j], atoms[i])) {
                if (std::abs(v) > zero_tol * rho) {
                    throw InvariantViolation("basis-matrix-triangular",
                                             "M(" + where + ") = " + std::to_string(v) + " for incomparable pair");
                }
            }
        }
    }
    for (const auto& [upper, lower] : covers) {
        const auto i = std::find(atoms.begin(), atoms.end(), upper) - atoms.begin();
        const auto j = std::find(atoms.begin(), atoms.end(), lower) - atoms.begin();
        const double v = m(i, j);
        if (!(v >= cover_floor * rho)) {
            throw InvariantViolation("basis-matrix-cover", "M(" + poset.atom(upper).to_string() + "," +
                                                               poset.atom(lower).to_string() + ") = " +
                                                               std::to_string(v) + " is not positive on a cover");
        }
    }
}

std::size_t vector_index(const Eigen::MatrixXd& t, double rho, const Eigen::VectorXd& w) {
    const Index n = t.rows();
    const double norm_t = t.cwiseAbs().rowwise().sum().maxCoeff();
    const double norm_w = w.cwiseAbs().maxCoeff();
    Eigen::VectorXd x = w;
    double bound = 1e-8 * norm_w;
    for (Index k = 1; k <= n + 1; ++k) {
        x = t * x - rho * x;
        bound *= norm_t;
        if (x.cwiseAbs().maxCoeff() <= bound) return static_cast<std::size_t>(k);
    }
    throw NumericalError("vector is not annihilated by any power of T - rho I up to n + 1");
}

std::size_t ascent_exact(const RationalMatrix& t, const Rational& rho) {
    const RationalMatrix s = t.shifted(rho);
    const std::size_t n = t.rows();
    std::size_t prev_rank = n;
    RationalMatrix power = s;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t r = exact_rank(power);
        if (r == prev_rank) return k;
        prev_rank = r;
        power = power * s;
    }
    return n;
}

std::size_t ascent_numeric(const SpectralProfile& profile) {
    if (!(profile.rho() > 0.0)) throw InputError("ascent needs rho(T) > 0");
    Eigen::MatrixXd s = profile.values();
    s.diagonal().array() -= profile.rho();
    const auto chain = kernel_chain(s, profile.size() + 1);
    // The last entry repeats the previous dimension.
    return chain.size() - 1;
}

CriticalStructure analyze_critical(const SpectralProfile& profile) {
    if (!(profile.rho() > 0.0)) throw InputError("critical structure needs rho(T) > 0");
    CriticalStructure cs;
    cs.rho = profile.rho();
    cs.atoms = critical_atoms(profile);
    const auto& poset = profile.poset();
    IndexSet subset(poset.size());
    for (std::size_t a : cs.atoms) {
        subset.insert(a);
        cs.borderline = cs.borderline || profile.atom(a).borderline;
    }
    cs.borderline = cs.borderline || profile.ambiguous();
    cs.covers = covers_within(poset, subset);
    const auto all_heights = heights(poset, subset);
    for (std::size_t a : cs.atoms) {
        cs.heights.push_back(all_heights[a]);
        cs.ascent = std::max(cs.ascent, all_heights[a]);
    }

    cs.basis = generalized_basis(profile, cs.atoms);
    cs.basis_matrix = basis_matrix(profile.values(), cs.basis);
    verify_basis_matrix(profile, cs.atoms, cs.basis_matrix);

    cs.indices_match_heights = true;
    for (std::size_t i = 0; i < cs.basis.size(); ++i) {
        std::size_t k = 0;
        try {
            k = vector_index(profile.values(), cs.rho, cs.basis[i]);
        } catch (const NumericalError&) {
            k = 0;
        }
        cs.indices.push_back(k);
        if (k != cs.heights[i]) cs.indices_match_heights = false;
    }
    return cs;
}

}  // namespace nnatoms
