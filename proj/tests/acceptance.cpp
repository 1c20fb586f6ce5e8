// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
// any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "nnatoms/atoms.hpp"
#include "nnatoms/critical.hpp"
#include "nnatoms/error.hpp"
#include "nnatoms/examples.hpp"
#include "nnatoms/oracle.hpp"
#include "nnatoms/periodicity.hpp"
#include "nnatoms/set_calculus.hpp"
#include "nnatoms/spectral.hpp"

using namespace nnatoms;

namespace {

// Collects failed checks; the first few messages are echoed in the summary.
struct Check {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (notes.size() < 3) notes.push_back(what);
    }
};

IndexSet S(std::size_t n, std::initializer_list<std::size_t> m) { return IndexSet::of(n, m); }

std::vector<gen::Planted> planted_suite() {
    gen::Rng rng(20240501);
    std::vector<gen::Planted> suite;
    for (int i = 0; i < 200; ++i) suite.push_back(gen::planted_critical(rng, 12));
    return suite;
}

const std::vector<gen::Planted>& suite() {
    static const auto s = planted_suite();
    return s;
}

// ---------------------------------------------------------------- AC1
void ac1(Check& c) {
    auto t = builtin_example("fig-m-graph-6");
    auto g = SupportGraph::from_matrix(t);
    c.cases = 1;
    auto part = find_atoms(g);
    c.expect(part.atoms == std::vector<IndexSet>{S(6, {0, 1, 2}), S(6, {3}), S(6, {4}), S(6, {5})}, "atoms");

    std::vector<IndexSet> inv;
    for (std::uint64_t m = 0; m < 64; ++m) {
        if (is_invariant(g, IndexSet::from_mask(6, m))) inv.push_back(IndexSet::from_mask(6, m));
    }
    std::vector<IndexSet> expected{S(6, {}), S(6, {3, 4, 5}), S(6, {3, 5}), S(6, {4, 5}), S(6, {5}),
                                   IndexSet::full(6)};
    std::sort(inv.begin(), inv.end());
    std::sort(expected.begin(), expected.end());
    c.expect(inv == expected, "invariant sets");
    auto fam = enumerate_families(g);
    c.expect(fam.invariant.size() == 6, "enumerated invariant count");

    c.expect(is_convex(g, S(6, {0, 1, 2, 3})), "{1,2,3,4} convex");
    c.expect(is_convex(g, S(6, {4})), "{5} convex");
    c.expect(is_convex(g, S(6, {4, 5})), "{5,6} convex");
    c.expect(!is_convex(g, S(6, {4}).complement()), "{5}^c not convex");

    const auto f4 = future(g, S(6, {3})), f5 = future(g, S(6, {4}));
    c.expect(future(g, S(6, {3}) & S(6, {4})).empty(), "F({4} ∩ {5}) empty");
    c.expect((f4 & f5) == S(6, {5}), "F({4}) ∩ F({5}) = {6}");

    c.expect(S(6, {4}).is_subset_of(future(g, S(6, {0, 1, 2, 3}))), "{5} in F({1,2,3,4})");
    c.expect(!S(6, {3}).is_subset_of(past(g, S(6, {4}))), "{4} not in P({5})");
}

// ---------------------------------------------------------------- AC2
void ac2(Check& c) {
    auto t = builtin_example("graph-supp");
    c.cases = 1;
    auto right = SpectralProfile::compute(t);
    auto left = SpectralProfile::compute(t.transposed());
    c.expect(right.poset().size() == 2, "two atoms");

    std::vector<Eigen::VectorXd> us, vs;
    for (double l : right.distinguished_eigenvalues())
        for (auto& g : nonneg_eigencone(right, l)) us.push_back(g.w);
    for (double l : left.distinguished_eigenvalues())
        for (auto& g : nonneg_eigencone(left, l)) vs.push_back(g.w);
    c.expect(us.size() == 1 && vs.size() == 1, "unique right and left nonnegative eigenvectors");
    if (us.size() == 1 && vs.size() == 1) {
        c.expect(us[0](0) == 0.0 && us[0](1) > 0.0, "u ∝ (0,1)");
        c.expect(vs[0](1) == 0.0 && vs[0](0) > 0.0, "v ∝ (1,0)");
        const double res_u = (t.values() * us[0] - us[0]).cwiseAbs().maxCoeff() / us[0].cwiseAbs().maxCoeff();
        const double res_v =
            (t.values().transpose() * vs[0] - vs[0]).cwiseAbs().maxCoeff() / vs[0].cwiseAbs().maxCoeff();
        c.expect(res_u <= 1e-10 && res_v <= 1e-10, "eigen-residuals");
    }
    auto verdict = classify_monatomic(right, left);
    c.expect(verdict.evidence.support_intersection && verdict.evidence.support_intersection->empty(),
             "supp(u) ∩ supp(v) empty");
    c.expect(multiplicity_at_radius(right) == 2, "mult at radius (atoms) = 2");
    c.expect(exact_multiplicity(t.exact(), 1) == 2, "mult at radius (exact) = 2");
    c.expect(!verdict.is_monatomic, "not monatomic");
}

// ---------------------------------------------------------------- AC3
void ac3(Check& c) {
    gen::Rng rng(303);
    std::vector<SupportGraph> graphs{SupportGraph::from_matrix(builtin_example("fig-m-graph-6"))};
    for (int i = 0; i < 200; ++i) {
        const double p = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
        graphs.push_back(gen::random_graph(rng, gen::uniform(rng, 1, 10), p));
    }
    for (const auto& g : graphs) {
        ++c.cases;
        auto r = verify_atom_characterizations(g);
        c.expect(r.all_equal && r.minimal_convex == r.components, "characterizations differ");
    }
}

// ---------------------------------------------------------------- AC4
void ac4(Check& c) {
    gen::Rng rng(404);
    static const Rational choices[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 2), Rational(0)};
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> radii;
        const std::size_t blocks = gen::uniform(rng, 1, 5);
        for (std::size_t b = 0; b < blocks; ++b) radii.push_back(choices[gen::uniform(rng, 0, 4)]);
        auto inst = gen::planted(rng, radii, 2, 0.5);
        auto t = gen::exact(inst.matrix);
        std::vector<Rational> lambdas;
        for (const auto& r : radii) {
            if (r != 0 && std::find(lambdas.begin(), lambdas.end(), r) == lambdas.end()) lambdas.push_back(r);
        }
        for (const auto& l : lambdas) {
            ++c.cases;
            auto sm = schwartz_multiplicity(t, l);
            c.expect(sm.consistent(), "instance " + std::to_string(i) + ": " + std::to_string(sm.total) +
                                          " vs " + std::to_string(sm.atom_sum));
            const auto planted = static_cast<std::size_t>(std::count(radii.begin(), radii.end(), l));
            c.expect(sm.total >= planted, "planted eigenvalue missing");
        }
    }
}

// ---------------------------------------------------------------- AC5
void ac5(Check& c, std::string& detail) {
    std::map<std::size_t, std::size_t> histogram;
    auto jordan = NonnegativeMatrix::from_rows({{1, 1}, {0, 1}}, Backend::Exact);
    auto diag = NonnegativeMatrix::from_rows({{1, 0}, {0, 1}}, Backend::Exact);
    c.cases += 2;
    c.expect(analyze_critical(SpectralProfile::compute(jordan)).ascent == 2, "jordan ascent");
    c.expect(ascent_exact(jordan.exact(), 1) == 2, "jordan exact ascent");
    c.expect(analyze_critical(SpectralProfile::compute(diag)).ascent == 1, "antichain ascent");
    c.expect(ascent_exact(diag.exact(), 1) == 1, "antichain exact ascent");

    for (std::size_t i = 0; i < suite().size(); ++i) {
        const auto& inst = suite()[i];
        ++c.cases;
        auto p = SpectralProfile::compute(gen::exact(inst.matrix));
        auto cs = analyze_critical(p);
        const auto max_h = *std::max_element(cs.heights.begin(), cs.heights.end());
        const auto exact = ascent_exact(inst.matrix, inst.rho);
        ++histogram[cs.ascent];
        c.expect(cs.ascent == exact && cs.ascent == max_h,
                 "instance " + std::to_string(i) + ": ascent " + std::to_string(cs.ascent) + ", exact " +
                     std::to_string(exact));
    }
    detail = " ascents:";
    for (const auto& [k, count] : histogram) detail += " " + std::to_string(k) + "x" + std::to_string(count);
}

// ---------------------------------------------------------------- AC6
void ac6(Check& c) {
    gen::Rng rng(606);
    std::uniform_real_distribution<double> coef(0.0, 3.0);
    for (std::size_t i = 0; i < suite().size(); ++i) {
        auto p = SpectralProfile::compute(gen::exact(suite()[i].matrix));
        const std::string tag = "instance " + std::to_string(i);
        for (double lambda : p.distinguished_eigenvalues()) {
            ++c.cases;
            const auto cone = nonneg_eigencone(p, lambda);
            std::vector<std::size_t> atoms;
            RationalMatrix stacked(p.size(), cone.size());
            for (std::size_t k = 0; k < cone.size(); ++k) {
                const auto& w = cone[k].w;
                atoms.push_back(cone[k].atom);
                const double scale = w.cwiseAbs().maxCoeff();
                const double res = (p.values() * w - lambda * w).cwiseAbs().maxCoeff() / (lambda * scale);
                c.expect(res <= 1e-10, tag + ": residual " + std::to_string(res));
                IndexSet support(p.size());
                for (std::size_t v = 0; v < p.size(); ++v) {
                    if (w(v) > p.tolerances().pos_tol * scale) support.insert(v);
                    c.expect(w(v) >= 0.0, tag + ": negative entry");
                    stacked(v, k) = rational_from_double(w(v));
                }
                c.expect(support == future(p.graph(), p.poset().atom(cone[k].atom)), tag + ": support != F(A)");
            }
            c.expect(is_antichain(p.poset(), atoms), tag + ": not an antichain");
            c.expect(exact_rank(stacked) == cone.size(), tag + ": generators dependent");

            std::vector<double> planted;
            Eigen::VectorXd v = Eigen::VectorXd::Zero(p.size());
            for (const auto& g : cone) {
                planted.push_back(gen::coin(rng, 0.25) ? 0.0 : coef(rng));
                v += planted.back() * g.w;
            }
            if (v.cwiseAbs().maxCoeff() == 0.0) continue;
            const auto got = decompose_nonneg_eigenvector(p, v, lambda);
            double err = 0.0;
            for (std::size_t k = 0; k < got.size(); ++k) err = std::max(err, std::abs(got[k].coefficient - planted[k]));
            c.expect(got.size() == planted.size() && err <= 1e-8, tag + ": coefficient error " + std::to_string(err));
        }
    }
}

// ---------------------------------------------------------------- AC7
void check_matrix(Check& c, const SpectralProfile& p, const std::vector<std::size_t>& atoms, const Eigen::MatrixXd& m,
                  const std::string& tag) {
    const double rho = p.rho();
    IndexSet subset(p.poset().size());
    for (auto a : atoms) subset.insert(a);
    const auto covers = covers_within(p.poset(), subset);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            const double v = m(i, j);
            if (i == j) {
                c.expect(std::abs(v - rho) <= 1e-9 * rho, tag + ": diagonal " + std::to_string(v));
            } else if (!p.poset().leq(atoms[j], atoms[i])) {
                c.expect(std::abs(v) <= 1e-9 * rho, tag + ": off-order entry " + std::to_string(v));
            }
        }
    }
    for (const auto& [up, low] : covers) {
        const auto i = std::find(atoms.begin(), atoms.end(), up) - atoms.begin();
        const auto j = std::find(atoms.begin(), atoms.end(), low) - atoms.begin();
        c.expect(m(i, j) >= 1e-6 * rho, tag + ": cover entry " + std::to_string(m(i, j)));
    }
}

void ac7(Check& c) {
    gen::Rng rng(707);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (std::size_t i = 0; i < suite().size(); ++i) {
        ++c.cases;
        auto p = SpectralProfile::compute(gen::exact(suite()[i].matrix));
        auto cs = analyze_critical(p);
        const std::string tag = "instance " + std::to_string(i);
        check_matrix(c, p, cs.atoms, cs.basis_matrix, tag);
        c.expect(cs.indices_match_heights, tag + ": index != height");

        auto basis = cs.basis;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (p.poset().less(cs.atoms[b], cs.atoms[a])) basis[a] += coef(rng) * cs.basis[b];
            }
        }
        check_matrix(c, p, cs.atoms, basis_matrix(p.values(), basis), tag + " (perturbed)");
        for (std::size_t a = 0; a < basis.size(); ++a) {
            c.expect(vector_index(p.values(), cs.rho, basis[a]) == cs.heights[a], tag + ": perturbed index");
        }
    }
}

// ---------------------------------------------------------------- AC8
SupportGraph cycle(std::size_t len) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return SupportGraph::from_edges(len, edges);
}

void ac8(Check& c) {
    for (std::size_t len = 2; len <= 8; ++len) {
        for (std::size_t n = 1; n <= 8; ++n) {
            ++c.cases;
            const auto g = cycle(len);
            const auto b = IndexSet::full(len);
            const std::string tag = "L=" + std::to_string(len) + " n=" + std::to_string(n);
            const auto power_atoms = power_matrix_atoms(g, n);
            c.expect(power_atoms.size() == std::gcd(len, n), tag + ": T^n-atom count");
            const auto cd = cyclic_classes(g, b, n);
            c.expect(cd.d == std::gcd(len, n) && n % cd.d == 0, tag + ": d");
            IndexSet covered(len);
            bool disjoint = true;
            for (std::size_t k = 0; k < cd.classes.size(); ++k) {
                disjoint = disjoint && !covered.intersects(cd.classes[k]);
                covered |= cd.classes[k];
                // A_k = T^k(A_0) ∩ B, computed here by iterating image directly.
                IndexSet ak = cd.classes[0];
                for (std::size_t s = 0; s < k; ++s) ak = image(g, ak);
                c.expect((ak & b) == cd.classes[k], tag + ": A_k != T^k(A_0) ∩ B");
                c.expect(std::find(power_atoms.atoms.begin(), power_atoms.atoms.end(), cd.classes[k]) !=
                             power_atoms.atoms.end(),
                         tag + ": class is not a T^n-atom");
            }
            c.expect(disjoint && covered == b, tag + ": classes do not partition B");
        }
    }
    ++c.cases;
    auto two = cyclic_classes(cycle(2), IndexSet::full(2), 2);
    c.expect(two.classes == std::vector<IndexSet>{S(2, {0}), S(2, {1})}, "two-cycle squared");

    ++c.cases;
    auto k3 = SupportGraph::from_matrix(builtin_example("kernel-k3-4"));
    auto sq = power_matrix_atoms(k3, 2);
    const auto half = S(4, {0, 1});
    c.expect(std::find(sq.atoms.begin(), sq.atoms.end(), half) != sq.atoms.end(), "first half is a T^2-atom");
    c.expect(is_invariant(k3.power(2), half), "first half is T^2-invariant");
    c.expect(find_atoms(k3).size() == 1 && !is_admissible(k3, half), "first half is not a T-atom");
}

// ---------------------------------------------------------------- AC9
void ac9(Check& c) {
    gen::Rng rng(909);
    for (int i = 0; i < 500; ++i) {
        ++c.cases;
        const std::size_t n = gen::uniform(rng, 1, 16);
        auto m = gen::exact(i % 2 ? gen::random_structured(rng, n) : gen::random_rational(rng, n, 0.15));
        auto p = SpectralProfile::compute(m);
        IndexSet rest = IndexSet::full(n);
        for (auto a : p.nonzero_atoms()) rest -= p.poset().atom(a);
        c.expect(p.graph().restricted(rest).power(static_cast<unsigned>(n)).edge_count() == 0,
                 "instance " + std::to_string(i) + ": not nilpotent");
    }
}

// ---------------------------------------------------------------- AC10
struct Suite {
    std::string name;
    std::function<void(gen::Rng&, Check&)> one_case;
};

SupportGraph small_graph(gen::Rng& rng, std::size_t max_n) {
    const std::size_t n = gen::uniform(rng, 1, max_n);
    return gen::random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.35)(rng));
}

std::vector<Suite> property_suites() {
    std::vector<Suite> s;
    s.push_back({"equi_convex", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 7);
                     const std::size_t n = g.size();
                     auto fam = enumerate_families(g);
                     auto a = gen::random_subset(rng, n);
                     const auto fs = strict_future(g, a), ps = strict_past(g, a);
                     const bool i = is_convex(g, a), ii = !fs.intersects(ps), iii = is_invariant(g, fs),
                                iv = is_coinvariant(g, ps);
                     bool v = false;
                     for (auto b : fam.invariant)
                         for (auto cc : fam.coinvariant) v = v || ((b & cc) == a.mask());
                     c.expect(i == ii && i == iii && i == iv && i == v, "conditions disagree on " + a.to_string());
                 }});
    s.push_back({"darknessoffuturepast", [](gen::Rng& rng, Check& c) {
                     auto g = gen::random_graph(rng, gen::uniform(rng, 1, 64), 0.03);
                     const auto a = gen::random_subset(rng, g.size(), 0.05), b = gen::random_subset(rng, g.size(), 0.05);
                     const bool x = !a.intersects(past(g, b)), y = !future(g, a).intersects(past(g, b)),
                                z = !future(g, a).intersects(b);
                     c.expect(x == y && y == z, "equivalence fails");
                 }});
    s.push_back({"conv-inv", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 20);
                     const auto x = gen::random_subset(rng, g.size(), 0.2);
                     const auto convex = future(g, x) & past(g, x);
                     const auto inv = future(g, gen::random_subset(rng, g.size(), 0.2));
                     c.expect(is_convex(g, convex) && is_convex(g, convex & inv), "convex ∩ invariant not convex");
                 }});
    s.push_back({"adm_T^n", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 14);
                     const unsigned k = static_cast<unsigned>(gen::uniform(rng, 2, 5));
                     const auto gk = g.power(k);
                     const auto part = find_atoms(g);
                     IndexSet adm(g.size());
                     for (const auto& atom : part.atoms)
                         if (gen::coin(rng, 0.5)) adm |= atom;
                     c.expect(is_admissible(gk, adm), "admissible set not admissible for the power");
                     const auto x = gen::random_subset(rng, g.size(), 0.3);
                     const auto convex = future(g, x) & past(g, x);
                     c.expect(is_convex(gk, convex), "convex set not convex for the power");
                     const auto all = IndexSet::full(g.size());
                     c.expect(!is_irreducible(gk, all) || is_irreducible(g, all), "irreducible power, reducible T");
                 }});
    s.push_back({"rest_prop(iii)", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 20);
                     const auto x = gen::random_subset(rng, g.size(), 0.3);
                     const auto omega = future(g, x) & past(g, x);
                     if (omega.empty()) return;
                     const auto r = restrict(g, omega);
                     const auto a = omega & gen::random_subset(rng, g.size(), 0.3);
                     c.expect(future(r, a) == (future(g, a) & omega), "F'(A) != F(A) ∩ Ω'");
                 }});
    s.push_back({"pow_rest", [](gen::Rng& rng, Check& c) {
                     const std::size_t n = gen::uniform(rng, 1, 7);
                     auto t = gen::exact(gen::random_rational(rng, n, 0.3));
                     auto g = SupportGraph::from_matrix(t);
                     const auto x = gen::random_subset(rng, n, 0.4);
                     const auto a = future(g, x) & past(g, x);
                     const unsigned k = static_cast<unsigned>(gen::uniform(rng, 1, 4));
                     c.expect(t.restricted(a).power(k) == t.power(k).restricted(a), "(T_A)^n != (T^n)_A");
                 }});
    s.push_back({"inversepositive", [](gen::Rng& rng, Check& c) {
                     const std::size_t n = gen::uniform(rng, 1, 8);
                     auto t = gen::exact(gen::random_structured(rng, n));
                     auto p = SpectralProfile::compute(t);
                     const double lambda = p.rho() + std::uniform_real_distribution<double>(0.1, 2.0)(rng);
                     const Eigen::MatrixXd r = resolvent(p, lambda);
                     c.expect(r.minCoeff() >= 0.0, "negative resolvent entry");
                     auto gr = SupportGraph::from_matrix(NonnegativeMatrix::from_float(r));
                     for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                         auto a = IndexSet::from_mask(n, m);
                         c.expect(is_invariant(gr, a) == is_invariant(p.graph(), a), "invariant families differ");
                     }
                 }});
    s.push_back({"def_rel_ordre", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 20);
                     const auto part = find_atoms(g);
                     const auto& a = part.atoms[gen::uniform(rng, 0, part.size() - 1)];
                     const auto& b = part.atoms[gen::uniform(rng, 0, part.size() - 1)];
                     if (a == b) return;
                     const bool i = a.is_subset_of(future(g, b)), ii = a.is_subset_of(strict_future(g, b)),
                                iii = b.is_subset_of(past(g, a)), iv = b.is_subset_of(strict_past(g, a));
                     c.expect(i == ii && i == iii && i == iv, "order characterizations differ");
                 }});
    s.push_back({"ex_dist", [](gen::Rng& rng, Check& c) {
                     auto t = gen::exact(gen::random_structured(rng, gen::uniform(rng, 1, 12)));
                     for (const auto& p : {SpectralProfile::compute(t), SpectralProfile::compute(t.transposed())}) {
                         for (auto a : p.nonzero_atoms()) {
                             bool found = false;
                             for (std::size_t b = 0; b < p.atoms().size(); ++b) {
                                 found = found || (p.atom(b).distinguished && p.poset().leq(b, a) &&
                                                   p.atom(b).rho >= p.atom(a).rho - p.atol());
                             }
                             c.expect(found, "no distinguished atom below a nonzero atom");
                         }
                     }
                 }});
    s.push_back({"atoms_in_support", [](gen::Rng& rng, Check& c) {
                     auto t = gen::exact(gen::random_structured(rng, gen::uniform(rng, 1, 12)));
                     auto p = SpectralProfile::compute(t);
                     std::uniform_real_distribution<double> coef(0.0, 2.0);
                     for (double lambda : p.distinguished_eigenvalues()) {
                         Eigen::VectorXd v = Eigen::VectorXd::Zero(p.size());
                         for (const auto& g : nonneg_eigencone(p, lambda)) v += coef(rng) * g.w;
                         const double scale = v.cwiseAbs().maxCoeff();
                         if (scale == 0.0) continue;
                         IndexSet supp(p.size());
                         for (std::size_t i = 0; i < p.size(); ++i)
                             if (v(i) > p.tolerances().pos_tol * scale) supp.insert(i);
                         for (std::size_t a = 0; a < p.atoms().size(); ++a) {
                             const auto& atom = p.poset().atom(a);
                             if (!atom.is_subset_of(supp)) continue;
                             const double ra = p.atom(a).rho;
                             const bool below = ra < lambda - p.atol();
                             bool at = false;
                             if (p.same_radius(ra, lambda)) {
                                 const auto& va = p.atom(a).perron;
                                 double ratio = -1.0, spread = 0.0;
                                 atom.for_each([&](std::size_t i) {
                                     const double q = v(i) / va(i);
                                     if (ratio < 0) ratio = q;
                                     spread = std::max(spread, std::abs(q - ratio));
                                 });
                                 at = spread <= 1e-8 * ratio && !supp.intersects(strict_past(p.graph(), atom));
                             }
                             c.expect(below != at, "dichotomy fails for atom " + atom.to_string());
                         }
                     }
                 }});
    s.push_back({"expT", [](gen::Rng& rng, Check& c) {
                     auto g = small_graph(rng, 16);
                     const auto a = gen::random_subset(rng, g.size(), 0.2);
                     IndexSet unions = a, frontier = a;
                     for (std::size_t k = 0; k < g.size(); ++k) {
                         frontier = image(g, frontier);
                         unions |= frontier;
                     }
                     c.expect(unions == future(g, a) && boolean_reachability(g, a) == future(g, a),
                              "union of images != F(A)");
                 }});
    return s;
}

void ac10(Check& c, std::string& detail) {
    std::size_t seed = 1000;
    std::ostringstream per;
    for (const auto& suite : property_suites()) {
        gen::Rng rng(seed++);
        Check local;
        for (int i = 0; i < 500; ++i) {
            ++local.cases;
            suite.one_case(rng, local);
        }
        per << " " << suite.name << "=" << local.cases - local.failures << "/" << local.cases;
        c.cases += local.cases;
        c.failures += local.failures;
        for (auto& n : local.notes) c.notes.push_back(suite.name + ": " + n);
    }
    detail = per.str();
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double budget_s;  // <= 0: no time limit
        std::function<void(Check&, std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "figure example: atoms, invariant sets, convexity, future/past", 1.0,
         [](Check& c, std::string&) { ac1(c); }},
        {"AC2", "two-atom support example: eigenvectors, supports, multiplicity", 0.0,
         [](Check& c, std::string&) { ac2(c); }},
        {"AC3", "four atom characterizations agree by enumeration", 30.0, [](Check& c, std::string&) { ac3(c); }},
        {"AC4", "multiplicity splits over atoms (exact)", 60.0, [](Check& c, std::string&) { ac4(c); }},
        {"AC5", "ascent = exact ascent = maximal critical height", 60.0, [](Check& c, std::string& d) { ac5(c, d); }},
        {"AC6", "nonnegative eigencone generators and decomposition", 0.0, [](Check& c, std::string&) { ac6(c); }},
        {"AC7", "basis matrix of the generalized eigenspace", 0.0, [](Check& c, std::string&) { ac7(c); }},
        {"AC8", "cyclic classes of powers", 5.0, [](Check& c, std::string&) { ac8(c); }},
        {"AC9", "nilpotent off the nonzero atoms", 0.0, [](Check& c, std::string&) { ac9(c); }},
        {"AC10", "property suites", 120.0, [](Check& c, std::string& d) { ac10(c, d); }},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c, detail);
        } catch (const std::exception& e) {
            ++c.failures;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool over_time = cr.budget_s > 0 && secs > cr.budget_s;
        const bool pass = c.failures == 0 && !over_time;
        if (!pass) ++failed;
        std::printf("%-4s %s  %s  [%zu cases, %zu failures, %.2f s%s]%s\n", cr.id, pass ? "PASS" : "FAIL", cr.title,
                    c.cases, c.failures, secs, over_time ? ", over time budget" : "", detail.c_str());
        for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
