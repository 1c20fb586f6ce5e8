#include "nnatoms/oracle.hpp"

#include <map>
#include <utility>

#include "nnatoms/error.hpp"
#include "nnatoms/set_calculus.hpp"

namespace nnatoms {

namespace {

using Mask = std::uint64_t;

void require_small(const SupportGraph& g) {
    if (g.size() > kEnumerationLimit) {
        throw InputError("exhaustive enumeration supports at most " + std::to_string(kEnumerationLimit) +
                         " states, got " + std::to_string(g.size()));
    }
}

// One-step images of every mask, built from the column supports.
std::vector<Mask> all_images(const std::vector<Mask>& step, std::size_t n) {
    const Mask count = Mask{1} << n;
    std::vector<Mask> img(count, 0);
    for (Mask m = 1; m < count; ++m) {
        const int low = __builtin_ctzll(m);
        img[m] = img[m & (m - 1)] | step[static_cast<std::size_t>(low)];
    }
    return img;
}

Mask fixed_point(const std::vector<Mask>& img, Mask m) {
    for (;;) {
        const Mask next = m | img[m];
        if (next == m) return m;
        m = next;
    }
}

}  // namespace

EnumeratedFamilies enumerate_families(const SupportGraph& g) {
    require_small(g);
    const std::size_t n = g.size();
    const Mask count = Mask{1} << n;
    const Mask full = count - 1;

    std::vector<Mask> out_step(n), in_step(n);
    for (std::size_t v = 0; v < n; ++v) {
        out_step[v] = g.successors(v).mask();
        in_step[v] = g.predecessors(v).mask();
    }
    const auto img = all_images(out_step, n);
    const auto pre = all_images(in_step, n);

    EnumeratedFamilies f;
    f.n = n;
    std::vector<char> convex(count, 0), irreducible(count, 0), admissible(count, 0);

    for (Mask m = 0; m < count; ++m) {
        if ((img[m] & ~m) == 0) f.invariant.push_back(m);
        if ((pre[m] & ~m) == 0) f.coinvariant.push_back(m);
        if ((fixed_point(img, m) & fixed_point(pre, m)) == m) {
            convex[m] = 1;
            f.convex.push_back(m);
        }
    }

    // A nonempty set is irreducible when no nonempty proper subset S is
    // invariant for the restriction, i.e. T(S) ∩ A ⊆ S fails for all S.
    for (Mask m = 1; m < count; ++m) {
        bool reducible = false;
        for (Mask s = (m - 1) & m; s != 0 && !reducible; s = (s - 1) & m) {
            if ((img[s] & m & ~s) == 0) reducible = true;
        }
        if (!reducible) {
            irreducible[m] = 1;
            f.irreducible.push_back(m);
        }
    }

    // Atoms of the generated sigma-field: states grouped by their membership
    // pattern across all invariant sets.
    std::vector<std::size_t> cls(n, 0);
    for (Mask inv : f.invariant) {
        std::map<std::pair<std::size_t, bool>, std::size_t> relabel;
        for (std::size_t v = 0; v < n; ++v) {
            const auto key = std::make_pair(cls[v], ((inv >> v) & 1U) != 0);
            cls[v] = relabel.emplace(key, relabel.size()).first->second;
        }
    }
    std::map<std::size_t, Mask> class_masks;
    for (std::size_t v = 0; v < n; ++v) class_masks[cls[v]] |= Mask{1} << v;
    for (Mask m = 0; m < count; ++m) {
        bool ok = true;
        for (const auto& [id, c] : class_masks) {
            if ((c & m) != 0 && (c & ~m) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            admissible[m] = 1;
            f.admissible.push_back(m);
        }
    }

    auto minimal_in = [&](const std::vector<char>& family, Mask m) {
        for (Mask s = (m - 1) & m; s != 0; s = (s - 1) & m) {
            if (family[s]) return false;
        }
        return true;
    };
    for (Mask m = 1; m < count; ++m) {
        if (convex[m] && minimal_in(convex, m)) f.minimal_convex.push_back(m);
        if (admissible[m] && minimal_in(admissible, m)) f.minimal_admissible.push_back(m);
        if (admissible[m] && irreducible[m]) f.admissible_irreducible.push_back(m);
        if (irreducible[m]) {
            const Mask rest = full & ~m;
            bool maximal = true;
            for (Mask s = rest; s != 0 && maximal; s = (s - 1) & rest) {
                if (irreducible[m | s]) maximal = false;
            }
            if (maximal) f.maximal_irreducible.push_back(m);
        }
    }
    return f;
}

std::size_t exact_rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a[i * cols + j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

    std::size_t rank = 0;
    mpz_class previous = 1;
    mpz_class t;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const mpz_class p = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class f = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = p * at(i, j) - f * at(rank, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, c) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t exact_multiplicity(const RationalMatrix& m, const Rational& lambda) {
    if (!m.is_square()) throw std::invalid_argument("exact_multiplicity: matrix is not square");
    const std::size_t n = m.rows();
    const RationalMatrix shifted = m.shifted(lambda);
    // Ranks of successive powers decrease strictly until they stabilize, and
    // they stabilize by the n-th power, so stopping early gives rank(A^n).
    RationalMatrix power = shifted;
    std::size_t rank = exact_rank(power);
    for (std::size_t k = 1; k < n && rank > 0; ++k) {
        power = power * shifted;
        const std::size_t next = exact_rank(power);
        if (next == rank) break;
        rank = next;
    }
    return n - rank;
}

IndexSet boolean_reachability(const SupportGraph& g, const IndexSet& a) {
    const std::size_t n = g.size();
    SupportGraph lazy = g;
    for (std::size_t v = 0; v < n; ++v) lazy.add_edge(v, v);
    const SupportGraph closure = lazy.power(static_cast<unsigned>(n == 0 ? 0 : n - 1));
    return image(closure, a);
}

RestrictionConjectureCheck check_restriction_conjecture(const SupportGraph& g, const IndexSet& omega) {
    require_small(g);
    RestrictionConjectureCheck r;
    const auto whole = enumerate_families(g);
    std::vector<char> t_admissible(std::size_t{1} << g.size(), 0);
    for (auto m : whole.admissible) t_admissible[m] = 1;
    const Mask om = omega.mask();
    r.omega_admissible = t_admissible[om] != 0;
    if (!r.omega_admissible || omega.empty()) return r;

    const auto restricted = enumerate_families(restrict(g, omega));
    std::vector<char> r_admissible(t_admissible.size(), 0);
    for (auto m : restricted.admissible) r_admissible[m] = 1;
    for (Mask s = om;; s = (s - 1) & om) {
        ++r.subsets_checked;
        if (t_admissible[s] != r_admissible[s]) ++r.disagreements;
        if (s == 0) break;
    }
    return r;
}

}  // namespace nnatoms
