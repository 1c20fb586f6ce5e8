#include "nnatoms/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "nnatoms/critical.hpp"
#include "nnatoms/error.hpp"
#include "nnatoms/oracle.hpp"
#include "nnatoms/periodicity.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

using nlohmann::json;

namespace {

constexpr std::size_t kInvariantListLimit = 16;

std::string decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<Members> down_closed_unions(const AtomPoset& poset) {
    const std::size_t k = poset.size();
    std::vector<IndexSet> sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        const IndexSet chosen = IndexSet::from_mask(k, mask);
        bool closed = true;
        chosen.for_each([&](std::size_t a) { closed = closed && poset.down_set(a).is_subset_of(chosen); });
        if (!closed) continue;
        IndexSet states(poset.partition().atom_of.size());
        chosen.for_each([&](std::size_t a) { states |= poset.atom(a); });
        sets.push_back(states);
    }
    std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    std::vector<Members> out;
    for (const auto& s : sets) out.push_back(s.members());
    return out;
}

OracleEntry run_oracle(const NonnegativeMatrix& t, const SpectralProfile& profile, const StructureReport& report) {
    if (t.size() > kEnumerationLimit) {
        throw InputError("--oracle enumerates all subsets and needs n <= " + std::to_string(kEnumerationLimit));
    }
    OracleEntry o;
    const auto& g = profile.graph();
    const auto characterizations = verify_atom_characterizations(g);
    o.atom_characterizations_agree = characterizations.all_equal;
    if (!o.atom_characterizations_agree) {
        throw InvariantViolation("atom-characterizations", "the four enumerated descriptions of atoms differ");
    }

    const auto families = enumerate_families(g);
    o.invariant_set_count = families.invariant.size();
    std::vector<Members> enumerated;
    for (auto mask : families.invariant) enumerated.push_back(IndexSet::from_mask(t.size(), mask).members());
    std::vector<Members> listed = report.invariant_sets.value_or(std::vector<Members>{});
    std::sort(enumerated.begin(), enumerated.end());
    std::sort(listed.begin(), listed.end());
    o.invariant_sets_agree = !report.invariant_sets || enumerated == listed;
    if (!o.invariant_sets_agree) {
        throw InvariantViolation("invariant-sets", "down-closed unions of atoms differ from the enumerated family");
    }

    o.reachability_agrees = true;
    for (std::size_t a = 0; a < profile.poset().size(); ++a) {
        const IndexSet& atom = profile.poset().atom(a);
        if (boolean_reachability(g, atom) != future(g, atom)) o.reachability_agrees = false;
    }
    if (!o.reachability_agrees) throw InvariantViolation("future-reachability", "boolean powers disagree with F(A)");

    if (t.is_exact() && profile.rho() > 0.0) {
        if (auto r = rational_radius(t, profile.rho())) {
            o.rational_rho = format_rational(*r);
            const auto sm = schwartz_multiplicity(t, *r);
            o.exact_multiplicity = sm.total;
            o.schwartz_consistent = sm.consistent();
            if (!sm.consistent()) {
                throw InvariantViolation("multiplicity-sum", "mult(rho, T) = " + std::to_string(sm.total) +
                                                                 " but the atoms sum to " + std::to_string(sm.atom_sum));
            }
            if (report.multiplicity_at_radius && *report.multiplicity_at_radius != sm.total) {
                throw InvariantViolation("multiplicity-at-radius",
                                         "critical atom count differs from the exact multiplicity");
            }
        }
    }
    return o;
}

// JSON helpers. Scalars are written as strings on the exact backend.
json scalar(double v, bool exact) { return exact ? json(decimal(v)) : json(v); }

double read_scalar(const json& j) {
    if (j.is_string()) return std::stod(j.get<std::string>());
    return j.get<double>();
}

json scalar_list(const std::vector<double>& v, bool exact) {
    json out = json::array();
    for (double x : v) out.push_back(scalar(x, exact));
    return out;
}

std::vector<double> read_scalar_list(const json& j) {
    std::vector<double> out;
    for (const auto& x : j) out.push_back(read_scalar(x));
    return out;
}

json covers_json(const std::vector<Cover>& covers) {
    json out = json::array();
    for (const auto& [upper, lower] : covers) out.push_back(json::array({upper, lower}));
    return out;
}

std::vector<Cover> read_covers(const json& j) {
    std::vector<Cover> out;
    for (const auto& c : j) out.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    return out;
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

StructureReport build_report(const NonnegativeMatrix& t, const ReportOptions& options) {
    const Tolerances& tol = options.tolerances;
    const auto profile = SpectralProfile::compute(t, tol);
    const auto& poset = profile.poset();

    StructureReport r;
    r.input = options.input;
    r.backend = t.is_exact() ? "exact" : "float";
    r.n = t.size();
    r.rho = profile.rho();
    r.ambiguous = profile.ambiguous();
    r.covers = poset.covers();
    r.tolerances = {tol.rtol, tol.atol, tol.pos_tol, tol.support_threshold, tol.tie_band};
    for (std::size_t a = 0; a < poset.size(); ++a) {
        const auto& s = profile.atom(a);
        r.atoms.push_back({poset.atom(a).members(), s.rho, s.nonzero, s.distinguished, s.critical, s.borderline});
    }
    if (poset.size() <= kInvariantListLimit) r.invariant_sets = down_closed_unions(poset);

    for (double lambda : profile.distinguished_eigenvalues()) {
        EigenconeEntry e;
        e.lambda = lambda;
        for (const auto& gen : nonneg_eigencone(profile, lambda)) {
            e.atoms.push_back(gen.atom);
            e.generators.push_back(to_std(gen.w));
        }
        r.eigencones.push_back(std::move(e));
    }

    if (profile.rho() > 0.0) {
        r.multiplicity_at_radius = multiplicity_at_radius(profile);

        const auto left = SpectralProfile::compute(t.transposed(), tol);
        const auto verdict = classify_monatomic(profile, left);
        MonatomicEntry m;
        m.is_monatomic = verdict.is_monatomic;
        if (verdict.nonzero_atom) m.nonzero_atom = poset.partition().atom_of[*verdict.nonzero_atom->first()];
        m.single_nonzero_atom = verdict.evidence.single_nonzero_atom;
        m.unique_and_simple = verdict.evidence.unique_and_simple;
        m.unique_and_overlapping = verdict.evidence.unique_and_overlapping;
        m.right_generators = verdict.evidence.right_generators;
        m.left_generators = verdict.evidence.left_generators;
        if (verdict.evidence.support_intersection) m.support_intersection = verdict.evidence.support_intersection->members();
        m.ambiguous = verdict.evidence.ambiguous;
        r.monatomic = m;

        const auto cs = analyze_critical(profile);
        CriticalEntry c;
        c.atoms = cs.atoms;
        c.covers = cs.covers;
        c.heights = cs.heights;
        c.ascent = cs.ascent;
        for (Eigen::Index i = 0; i < cs.basis_matrix.rows(); ++i) {
            c.basis_matrix.push_back(to_std(cs.basis_matrix.row(i).transpose()));
        }
        c.indices = cs.indices;
        c.indices_match_heights = cs.indices_match_heights;
        if (!cs.indices_match_heights) {
            r.warnings.push_back("measured index of some basis vector differs from its height");
        }
        if (t.is_exact()) {
            if (auto rr = rational_radius(t, profile.rho())) {
                c.ascent_exact = ascent_exact(t.exact(), *rr);
                if (*c.ascent_exact != c.ascent) {
                    throw InvariantViolation("ascent-height", "exact ascent " + std::to_string(*c.ascent_exact) +
                                                                  " differs from the maximal critical height " +
                                                                  std::to_string(c.ascent));
                }
            } else {
                r.warnings.push_back("rho(T) is not a small rational; exact ascent skipped");
            }
        }
        r.critical = c;
    }
    if (r.ambiguous) r.warnings.push_back("some radius comparisons fall in the borderline band");

    if (options.power) {
        r.power = *options.power;
        power_matrix_atoms(profile.graph(), *options.power);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            if (!profile.atom(a).nonzero) continue;
            const auto cd = cyclic_classes(profile.graph(), poset.atom(a), *options.power);
            PeriodicityEntry p;
            p.atom = a;
            p.period = period(profile.graph(), poset.atom(a));
            p.d = cd.d;
            for (const auto& cls : cd.classes) p.classes.push_back(cls.members());
            r.periodicity.push_back(std::move(p));
        }
    }

    if (options.oracle) r.oracle = run_oracle(t, profile, r);
    return r;
}

std::string to_json(const StructureReport& r) {
    const bool exact = r.backend == "exact";
    json j;
    j["schema"] = r.schema;
    j["input"] = r.input;
    j["backend"] = r.backend;
    j["n"] = r.n;
    j["rho"] = scalar(r.rho, exact);
    j["ambiguous"] = r.ambiguous;
    j["covers"] = covers_json(r.covers);

    json atoms = json::array();
    for (const auto& a : r.atoms) {
        atoms.push_back({{"members", a.members},
                         {"rho", scalar(a.rho, exact)},
                         {"nonzero", a.nonzero},
                         {"distinguished", a.distinguished},
                         {"critical", a.critical},
                         {"borderline", a.borderline}});
    }
    j["atoms"] = atoms;

    json cones = json::array();
    for (const auto& e : r.eigencones) {
        json gens = json::array();
        for (const auto& w : e.generators) gens.push_back(scalar_list(w, exact));
        cones.push_back({{"lambda", scalar(e.lambda, exact)}, {"atoms", e.atoms}, {"generators", gens}});
    }
    j["eigencones"] = cones;
    put_optional(j, "multiplicity_at_radius", r.multiplicity_at_radius);

    if (r.monatomic) {
        const auto& m = *r.monatomic;
        json mj{{"is_monatomic", m.is_monatomic},
                {"single_nonzero_atom", m.single_nonzero_atom},
                {"unique_and_simple", m.unique_and_simple},
                {"unique_and_overlapping", m.unique_and_overlapping},
                {"right_generators", m.right_generators},
                {"left_generators", m.left_generators},
                {"ambiguous", m.ambiguous}};
        put_optional(mj, "nonzero_atom", m.nonzero_atom);
        put_optional(mj, "support_intersection", m.support_intersection);
        j["monatomic"] = mj;
    } else {
        j["monatomic"] = nullptr;
    }

    if (r.critical) {
        const auto& c = *r.critical;
        json rows = json::array();
        for (const auto& row : c.basis_matrix) rows.push_back(scalar_list(row, exact));
        json cj{{"atoms", c.atoms},
                {"covers", covers_json(c.covers)},
                {"heights", c.heights},
                {"ascent", c.ascent},
                {"basis_matrix", rows},
                {"indices", c.indices},
                {"indices_match_heights", c.indices_match_heights}};
        put_optional(cj, "ascent_exact", c.ascent_exact);
        j["critical"] = cj;
    } else {
        j["critical"] = nullptr;
    }

    put_optional(j, "invariant_sets", r.invariant_sets);
    put_optional(j, "power", r.power);
    json per = json::array();
    for (const auto& p : r.periodicity) {
        per.push_back({{"atom", p.atom}, {"period", p.period}, {"d", p.d}, {"classes", p.classes}});
    }
    j["periodicity"] = per;

    if (r.oracle) {
        const auto& o = *r.oracle;
        json oj{{"atom_characterizations_agree", o.atom_characterizations_agree},
                {"invariant_set_count", o.invariant_set_count},
                {"invariant_sets_agree", o.invariant_sets_agree},
                {"reachability_agrees", o.reachability_agrees}};
        put_optional(oj, "rational_rho", o.rational_rho);
        put_optional(oj, "exact_multiplicity", o.exact_multiplicity);
        put_optional(oj, "schwartz_consistent", o.schwartz_consistent);
        j["oracle"] = oj;
    } else {
        j["oracle"] = nullptr;
    }

    j["tolerances"] = {{"rtol", decimal(r.tolerances.rtol)},
                       {"atol", decimal(r.tolerances.atol)},
                       {"pos_tol", decimal(r.tolerances.pos_tol)},
                       {"support_threshold", decimal(r.tolerances.support_threshold)},
                       {"tie_band", decimal(r.tolerances.tie_band)}};
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

StructureReport from_json(const std::string& text) {
    StructureReport r;
    try {
        const json j = json::parse(text);
        r.schema = j.at("schema").get<int>();
        if (r.schema != 1) throw InputError("unsupported report schema " + std::to_string(r.schema));
        r.input = j.at("input").get<std::string>();
        r.backend = j.at("backend").get<std::string>();
        r.n = j.at("n").get<std::size_t>();
        r.rho = read_scalar(j.at("rho"));
        r.ambiguous = j.at("ambiguous").get<bool>();
        r.covers = read_covers(j.at("covers"));
        for (const auto& a : j.at("atoms")) {
            r.atoms.push_back({a.at("members").get<Members>(), read_scalar(a.at("rho")), a.at("nonzero").get<bool>(),
                               a.at("distinguished").get<bool>(), a.at("critical").get<bool>(),
                               a.at("borderline").get<bool>()});
        }
        for (const auto& e : j.at("eigencones")) {
            EigenconeEntry entry;
            entry.lambda = read_scalar(e.at("lambda"));
            entry.atoms = e.at("atoms").get<std::vector<std::size_t>>();
            for (const auto& w : e.at("generators")) entry.generators.push_back(read_scalar_list(w));
            r.eigencones.push_back(std::move(entry));
        }
        r.multiplicity_at_radius = get_optional<std::size_t>(j, "multiplicity_at_radius");
        if (!j.at("monatomic").is_null()) {
            const auto& mj = j.at("monatomic");
            MonatomicEntry m;
            m.is_monatomic = mj.at("is_monatomic").get<bool>();
            m.single_nonzero_atom = mj.at("single_nonzero_atom").get<bool>();
            m.unique_and_simple = mj.at("unique_and_simple").get<bool>();
            m.unique_and_overlapping = mj.at("unique_and_overlapping").get<bool>();
            m.right_generators = mj.at("right_generators").get<std::size_t>();
            m.left_generators = mj.at("left_generators").get<std::size_t>();
            m.ambiguous = mj.at("ambiguous").get<bool>();
            m.nonzero_atom = get_optional<std::size_t>(mj, "nonzero_atom");
            m.support_intersection = get_optional<Members>(mj, "support_intersection");
            r.monatomic = m;
        }
        if (!j.at("critical").is_null()) {
            const auto& cj = j.at("critical");
            CriticalEntry c;
            c.atoms = cj.at("atoms").get<std::vector<std::size_t>>();
            c.covers = read_covers(cj.at("covers"));
            c.heights = cj.at("heights").get<std::vector<std::size_t>>();
            c.ascent = cj.at("ascent").get<std::size_t>();
            for (const auto& row : cj.at("basis_matrix")) c.basis_matrix.push_back(read_scalar_list(row));
            c.indices = cj.at("indices").get<std::vector<std::size_t>>();
            c.indices_match_heights = cj.at("indices_match_heights").get<bool>();
            c.ascent_exact = get_optional<std::size_t>(cj, "ascent_exact");
            r.critical = c;
        }
        r.invariant_sets = get_optional<std::vector<Members>>(j, "invariant_sets");
        r.power = get_optional<std::size_t>(j, "power");
        for (const auto& p : j.at("periodicity")) {
            r.periodicity.push_back({p.at("atom").get<std::size_t>(), p.at("period").get<std::size_t>(),
                                     p.at("d").get<std::size_t>(), p.at("classes").get<std::vector<Members>>()});
        }
        if (!j.at("oracle").is_null()) {
            const auto& oj = j.at("oracle");
            OracleEntry o;
            o.atom_characterizations_agree = oj.at("atom_characterizations_agree").get<bool>();
            o.invariant_set_count = oj.at("invariant_set_count").get<std::size_t>();
            o.invariant_sets_agree = oj.at("invariant_sets_agree").get<bool>();
            o.reachability_agrees = oj.at("reachability_agrees").get<bool>();
            o.rational_rho = get_optional<std::string>(oj, "rational_rho");
            o.exact_multiplicity = get_optional<std::size_t>(oj, "exact_multiplicity");
            o.schwartz_consistent = get_optional<bool>(oj, "schwartz_consistent");
            r.oracle = o;
        }
        const auto& tj = j.at("tolerances");
        r.tolerances = {read_scalar(tj.at("rtol")), read_scalar(tj.at("atol")), read_scalar(tj.at("pos_tol")),
                        read_scalar(tj.at("support_threshold")), read_scalar(tj.at("tie_band"))};
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string export_dot(const StructureReport& r) {
    std::ostringstream out;
    out << "digraph atoms {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t a = 0; a < r.atoms.size(); ++a) {
        const auto& atom = r.atoms[a];
        std::string members;
        for (std::size_t i = 0; i < atom.members.size(); ++i) {
            members += (i ? "," : "") + std::to_string(atom.members[i]);
        }
        char rho[32];
        std::snprintf(rho, sizeof rho, "%.6g", atom.rho);
        out << "  a" << a << " [label=\"" << rho << "\", tooltip=\"{" << members << "}\"";
        if (atom.distinguished) out << ", penwidth=3";
        if (atom.critical) out << ", style=filled, fillcolor=\"#f4a582\"";
        if (atom.borderline) out << ", color=\"#b2182b\"";
        out << "];\n";
    }
    for (const auto& [upper, lower] : r.covers) out << "  a" << upper << " -> a" << lower << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace nnatoms
