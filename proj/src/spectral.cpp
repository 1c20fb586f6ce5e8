#include "nnatoms/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnatoms/error.hpp"
#include "nnatoms/oracle.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

bool carries_cycle(const SupportGraph& g, const IndexSet& atom) {
    if (atom.count() > 1) return true;
    const std::size_t v = *atom.first();
    return g.has_edge(v, v);
}

Eigen::VectorXd scatter(const IndexSet& set, const Eigen::VectorXd& local, std::size_t n) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(idx(n));
    Index k = 0;
    set.for_each([&](std::size_t i) { full(idx(i)) = local(k++); });
    return full;
}

Eigen::MatrixXd principal(const Eigen::MatrixXd& m, const std::vector<std::size_t>& rows) {
    Eigen::MatrixXd b(idx(rows.size()), idx(rows.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t c = 0; c < rows.size(); ++c) b(idx(a), idx(c)) = m(idx(rows[a]), idx(rows[c]));
    }
    return b;
}

Eigen::MatrixXd thresholded(const NonnegativeMatrix& t, double relative_threshold) {
    Eigen::MatrixXd v = t.values();
    if (t.is_exact()) {
        const auto& e = t.exact();
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (e(i, j) == 0) v(idx(i), idx(j)) = 0.0;
            }
        }
        return v;
    }
    const double cut = relative_threshold * t.max_entry();
    return (v.array() > cut).select(v, 0.0);
}

IndexSet support_of(const Eigen::VectorXd& v, double pos_tol) {
    IndexSet s(static_cast<std::size_t>(v.size()));
    const double cut = pos_tol * v.cwiseAbs().maxCoeff();
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) > cut) s.insert(static_cast<std::size_t>(i));
    }
    return s;
}

}  // namespace

PerronPair perron_pair(const Eigen::MatrixXd& block, const Tolerances& tol) {
    const Index k = block.rows();
    if (k == 0) throw std::invalid_argument("perron_pair: empty block");
    const double shift = std::max(block.rowwise().sum().maxCoeff(), std::numeric_limits<double>::min());
    const double target = tol.rtol * 1e-3;

    Eigen::VectorXd x = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
    PerronPair result;
    double best_gap = std::numeric_limits<double>::infinity();
    std::size_t since_improvement = 0;
    double estimate = 0.0;
    double gap = std::numeric_limits<double>::infinity();

    for (std::size_t it = 1; it <= tol.max_iters; ++it) {
        Eigen::VectorXd y = block * x + shift * x;
        const Eigen::ArrayXd ratios = y.array() / x.array();
        const double lo = ratios.minCoeff() - shift;
        const double hi = ratios.maxCoeff() - shift;
        estimate = y.sum() / x.sum() - shift;
        const double scale = std::max(std::abs(estimate), std::numeric_limits<double>::min());
        gap = (hi - lo) / scale;
        x = y / y.sum();

        if (gap < best_gap * (1.0 - 1e-3)) {
            best_gap = gap;
            since_improvement = 0;
        } else {
            ++since_improvement;
        }
        const bool tight = gap <= target;
        const bool stalled = gap <= tol.rtol && since_improvement >= 200;
        if (tight || stalled) {
            result.radius = estimate;
            result.vector = x;
            result.iterations = it;
            result.gap = gap;
            return result;
        }
    }
    if (gap <= tol.rtol) {
        result.radius = estimate;
        result.vector = x;
        result.iterations = tol.max_iters;
        result.gap = gap;
        return result;
    }
    throw NumericalError("power iteration did not converge after " + std::to_string(tol.max_iters) +
                             " iterations (estimate " + std::to_string(estimate) + ", relative bracket " +
                             std::to_string(gap) + ")",
                         estimate, gap);
}

double spectral_radius(const NonnegativeMatrix& t, const IndexSet& block, const Tolerances& tol) {
    if (block.universe() != t.size()) throw std::invalid_argument("spectral_radius: universe mismatch");
    if (block.empty()) return 0.0;
    const Eigen::MatrixXd values = thresholded(t, tol.support_threshold);
    const SupportGraph g = SupportGraph::from_matrix(t, tol.support_threshold).restricted(block);
    double rho = 0.0;
    for (const auto& atom : find_atoms(g).atoms) {
        if (!atom.is_subset_of(block) || !carries_cycle(g, atom)) continue;
        rho = std::max(rho, perron_pair(principal(values, atom.members()), tol).radius);
    }
    return rho;
}

double spectral_radius(const NonnegativeMatrix& t, const Tolerances& tol) {
    return spectral_radius(t, IndexSet::full(t.size()), tol);
}

SpectralProfile SpectralProfile::compute(const NonnegativeMatrix& t, const Tolerances& tol) {
    SpectralProfile p;
    p.matrix_ = t;
    p.tol_ = tol;
    p.values_ = thresholded(t, tol.support_threshold);
    p.graph_ = SupportGraph::from_matrix(t, tol.support_threshold);
    p.poset_ = AtomPoset::build(p.graph_);
    const std::size_t n = t.size();
    const std::size_t k = p.poset_.size();

    p.atoms_.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        const IndexSet& atom = p.poset_.atom(a);
        auto& s = p.atoms_[a];
        s.nonzero = carries_cycle(p.graph_, atom);
        if (!s.nonzero) continue;
        const PerronPair pp = perron_pair(principal(p.values_, atom.members()), tol);
        s.rho = pp.radius;
        s.perron = scatter(atom, pp.vector, n);
        p.rho_ = std::max(p.rho_, s.rho);
    }
    p.atol_abs_ = tol.atol * p.rho_;

    // Distinguished: every strictly lower atom has a strictly smaller radius.
    // Route one walks the order; route two takes rho(F*(A)) as the largest
    // radius among atoms met by the strict future, found at the set level.
    for (std::size_t a = 0; a < k; ++a) {
        auto& s = p.atoms_[a];
        if (!s.nonzero) continue;
        bool by_order = true;
        for (std::size_t b = 0; b < k; ++b) {
            if (!p.poset_.less(b, a)) continue;
            const auto& sb = p.atoms_[b];
            if (!(sb.rho < s.rho - p.atol_abs_)) by_order = false;
            if (sb.nonzero && p.tie_ambiguous(sb.rho, s.rho)) s.borderline = true;
        }
        const IndexSet fstar = strict_future(p.graph_, p.poset_.atom(a));
        double rho_fstar = 0.0;
        fstar.for_each([&](std::size_t v) { rho_fstar = std::max(rho_fstar, p.atoms_[p.poset_.partition().atom_of[v]].rho); });
        const bool by_future = rho_fstar < s.rho - p.atol_abs_;
        if (by_order != by_future) s.borderline = true;
        s.distinguished = by_order && by_future;

        s.critical = p.same_radius(s.rho, p.rho_);
        if (p.tie_ambiguous(s.rho, p.rho_)) s.borderline = true;
        if (s.borderline) p.ambiguous_ = true;
    }
    return p;
}

bool SpectralProfile::same_radius(double x, double y) const { return std::abs(x - y) <= atol_abs_; }

bool SpectralProfile::tie_ambiguous(double x, double y) const {
    const double d = std::abs(x - y);
    return d > atol_abs_ / tol_.tie_band && d <= atol_abs_ * tol_.tie_band;
}

std::vector<std::size_t> SpectralProfile::nonzero_atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a].nonzero) out.push_back(a);
    }
    return out;
}

std::vector<std::size_t> SpectralProfile::distinguished_atoms(double lambda) const {
    std::vector<std::size_t> out;
    if (!(lambda > 0.0)) return out;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a].distinguished && same_radius(atoms_[a].rho, lambda)) out.push_back(a);
    }
    return out;
}

std::vector<double> SpectralProfile::distinguished_eigenvalues() const {
    std::vector<double> radii;
    for (const auto& s : atoms_) {
        if (s.distinguished) radii.push_back(s.rho);
    }
    std::sort(radii.begin(), radii.end(), std::greater<>());
    std::vector<double> out;
    for (double r : radii) {
        if (out.empty() || !same_radius(out.back(), r)) out.push_back(r);
    }
    return out;
}

Eigen::VectorXd perron_vector(const SpectralProfile& profile, std::size_t atom) {
    const auto& s = profile.atom(atom);
    if (!s.nonzero) {
        throw InputError("no Perron vector for zero atom " + profile.poset().atom(atom).to_string());
    }
    return s.perron;
}

Eigen::VectorXd eigenfunction_w(const SpectralProfile& profile, std::size_t atom) {
    const auto& s = profile.atom(atom);
    const IndexSet& a = profile.poset().atom(atom);
    if (!s.distinguished) throw InputError("atom " + a.to_string() + " is not distinguished");
    const Eigen::MatrixXd& t = profile.values();
    const IndexSet b = strict_future(profile.graph(), a);
    Eigen::VectorXd w = s.perron;
    if (b.empty()) return w;

    const auto rows = b.members();
    Eigen::MatrixXd system = -principal(t, rows);
    system.diagonal().array() += s.rho;
    const Eigen::VectorXd image = t * s.perron;
    Eigen::VectorXd rhs(idx(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) rhs(idx(r)) = image(idx(rows[r]));

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (!(lu.rcond() > 1e3 * std::numeric_limits<double>::epsilon())) {
        throw NumericalError("singular system for w_A on " + a.to_string() + " (rcond " + std::to_string(lu.rcond()) +
                             "); radius tie misclassified upstream");
    }
    const Eigen::VectorXd f = lu.solve(rhs);
    for (std::size_t r = 0; r < rows.size(); ++r) w(idx(rows[r])) = f(idx(r));
    if (w.minCoeff() < -profile.tolerances().pos_tol * w.cwiseAbs().maxCoeff() * 1e3) {
        throw InvariantViolation("distinguished-eigenvector", "w_A has a negative entry for atom " + a.to_string());
    }
    return w;
}

std::vector<EigenconeGenerator> nonneg_eigencone(const SpectralProfile& profile, double lambda) {
    std::vector<EigenconeGenerator> out;
    for (std::size_t a : profile.distinguished_atoms(lambda)) out.push_back({a, eigenfunction_w(profile, a)});
    return out;
}

std::vector<ConeCoefficient> decompose_nonneg_eigenvector(const SpectralProfile& profile, const Eigen::VectorXd& v,
                                                          double lambda) {
    if (static_cast<std::size_t>(v.size()) != profile.size()) throw InputError("vector length does not match matrix");
    const double scale = v.cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) throw InputError("zero vector is not an eigenvector");
    const auto& tol = profile.tolerances();
    if (v.minCoeff() < -tol.pos_tol * scale) throw InputError("vector has negative entries");
    const double residual = (profile.values() * v - lambda * v).cwiseAbs().maxCoeff();
    if (residual > 100 * tol.rtol * std::max(lambda, 1e-300) * scale) {
        throw InputError("vector is not an eigenvector for lambda = " + std::to_string(lambda) +
                         " (residual " + std::to_string(residual / (lambda * scale)) + ")");
    }

    std::vector<ConeCoefficient> out;
    Eigen::VectorXd rebuilt = Eigen::VectorXd::Zero(v.size());
    for (const auto& gen : nonneg_eigencone(profile, lambda)) {
        const IndexSet& a = profile.poset().atom(gen.atom);
        double mass = 0.0;
        double perron_mass = 0.0;
        a.for_each([&](std::size_t i) {
            mass += v(idx(i));
            perron_mass += gen.w(idx(i));
        });
        const double c = mass / perron_mass;
        if (c < -tol.atol * scale) {
            throw InvariantViolation("eigencone-decomposition", "negative coefficient on atom " + a.to_string());
        }
        out.push_back({gen.atom, c});
        rebuilt += c * gen.w;
    }
    const double miss = (rebuilt - v).cwiseAbs().maxCoeff();
    if (miss > 1e-8 * scale) {
        throw InvariantViolation("eigencone-decomposition",
                                 "eigenvector is not in the cone of the w_A (miss " + std::to_string(miss / scale) + ")");
    }
    return out;
}

SchwartzMultiplicity schwartz_multiplicity(const NonnegativeMatrix& t, const Rational& lambda) {
    if (!t.is_exact()) throw InputError("exact multiplicities need the exact backend; load the matrix as rationals");
    if (lambda == 0) throw InputError("multiplicity formula requires a nonzero lambda");
    SchwartzMultiplicity r;
    r.total = exact_multiplicity(t.exact(), lambda);
    const auto partition = find_atoms(SupportGraph::from_matrix(t));
    for (const auto& atom : partition.atoms) {
        const auto members = atom.members();
        const std::size_t m = exact_multiplicity(t.exact().principal(members), lambda);
        r.per_atom.push_back(m);
        r.atom_sum += m;
    }
    return r;
}

std::size_t multiplicity_at_radius(const SpectralProfile& profile) {
    if (!(profile.rho() > 0.0)) throw InputError("multiplicity at the radius needs rho(T) > 0");
    std::size_t count = 0;
    for (const auto& s : profile.atoms()) count += s.critical ? 1 : 0;
    return count;
}

std::optional<Rational> rational_radius(const NonnegativeMatrix& t, double rho) {
    if (!t.is_exact() || t.size() > 64 || !(rho > 0.0) || !std::isfinite(rho)) return std::nullopt;
    // Continued-fraction convergents h/k of rho.
    mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    double x = rho;
    for (int step = 0; step < 40; ++step) {
        const double a_d = std::floor(x);
        if (a_d > 1e15) break;
        const mpz_class a(a_d);
        const mpz_class h = a * h_prev + h_prev2;
        const mpz_class k = a * k_prev + k_prev2;
        if (k > 1000000) break;
        Rational r(h, k);
        r.canonicalize();
        if (std::abs(r.get_d() - rho) <= 1e-9 * rho && exact_multiplicity(t.exact(), r) > 0) return r;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const double frac = x - a_d;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

MonatomicityVerdict classify_monatomic(const SpectralProfile& right, const SpectralProfile& left) {
    if (!(right.rho() > 0.0)) throw InputError("monatomicity is defined for rho(T) > 0");
    MonatomicityVerdict v;
    auto& ev = v.evidence;
    ev.ambiguous = right.ambiguous() || left.ambiguous();

    const auto nonzero = right.nonzero_atoms();
    ev.single_nonzero_atom = nonzero.size() == 1;

    std::vector<std::size_t> right_dist, left_dist;
    for (std::size_t a = 0; a < right.atoms().size(); ++a) {
        if (right.atom(a).distinguished) right_dist.push_back(a);
    }
    for (std::size_t a = 0; a < left.atoms().size(); ++a) {
        if (left.atom(a).distinguished) left_dist.push_back(a);
    }
    ev.right_generators = right_dist.size();
    ev.left_generators = left_dist.size();
    ev.multiplicity_at_radius = multiplicity_at_radius(right);
    const bool unique = right_dist.size() == 1 && left_dist.size() == 1;

    if (unique) {
        v.right_u = eigenfunction_w(right, right_dist.front());
        v.left_v = eigenfunction_w(left, left_dist.front());
        const double pos = right.tolerances().pos_tol;
        ev.support_intersection = support_of(*v.right_u, pos) & support_of(*v.left_v, pos);
    }
    ev.unique_and_simple = unique && ev.multiplicity_at_radius == 1;
    ev.unique_and_overlapping = unique && !ev.support_intersection->empty();

    if (ev.single_nonzero_atom != ev.unique_and_simple || ev.single_nonzero_atom != ev.unique_and_overlapping) {
        throw InvariantViolation("monatomic-characterization",
                                 std::string("conditions disagree: (i)=") + (ev.single_nonzero_atom ? "1" : "0") +
                                     " (ii)=" + (ev.unique_and_simple ? "1" : "0") +
                                     " (iii)=" + (ev.unique_and_overlapping ? "1" : "0"));
    }
    v.is_monatomic = ev.single_nonzero_atom;
    if (v.is_monatomic) {
        v.nonzero_atom = right.poset().atom(nonzero.front());
        if (*ev.support_intersection != *v.nonzero_atom) {
            throw InvariantViolation("monatomic-characterization",
                                     "supp(u) ∩ supp(v) = " + ev.support_intersection->to_string() +
                                         " differs from the nonzero atom " + v.nonzero_atom->to_string());
        }
        const double ru = right.atom(right_dist.front()).rho;
        const double lv = left.atom(left_dist.front()).rho;
        if (!right.same_radius(ru, right.rho()) || !right.same_radius(lv, right.rho())) {
            throw InvariantViolation("monatomic-characterization", "eigenvalues of u and v differ from rho(T)");
        }
    }
    return v;
}

MonatomicityVerdict classify_monatomic(const NonnegativeMatrix& t, const Tolerances& tol) {
    const auto right = SpectralProfile::compute(t, tol);
    const auto left = SpectralProfile::compute(t.transposed(), tol);
    return classify_monatomic(right, left);
}

Eigen::MatrixXd resolvent(const SpectralProfile& profile, double lambda) {
    if (!(lambda > profile.rho() + std::max(profile.atol(), profile.tolerances().rtol * profile.rho()))) {
        throw InputError("resolvent needs lambda > rho(T) = " + std::to_string(profile.rho()));
    }
    const auto n = idx(profile.size());
    Eigen::MatrixXd system = lambda * Eigen::MatrixXd::Identity(n, n) - profile.values();
    Eigen::MatrixXd inv = Eigen::PartialPivLU<Eigen::MatrixXd>(system).inverse();
    const double scale = inv.cwiseAbs().maxCoeff();
    if (inv.minCoeff() < -1e-12 * scale) {
        throw InvariantViolation("inverse-positive", "resolvent has a negative entry");
    }
    return inv.cwiseMax(0.0);
}

}  // namespace nnatoms
