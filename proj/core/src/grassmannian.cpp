#include "qpmut/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qpmut {

namespace {

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw internal_error("mod_inv of a non-unit");
    return t < 0 ? t + p : t;
}

long rational_mod_p(const Rational& x, long p) {
    mpz_class pm(p);
    mpz_class den = x.get_den() % pm;
    if (den == 0) throw input_error("prime divides a matrix denominator");
    mpz_class num = x.get_num() % pm;
    long n = num.get_si();
    if (n < 0) n += p;
    return (n * mod_inv(den.get_si(), p)) % p;
}

using ModVec = std::vector<long>;
using ModMat = std::vector<ModVec>;  // row-major

ModMat matrix_mod_p(const QMatrix& m, long p) {
    ModMat r(m.rows(), ModVec(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = rational_mod_p(m.at(i, j), p);
    return r;
}

bool mod_mat_is_zero(const ModMat& m) {
    for (const auto& row : m)
        for (long v : row)
            if (v != 0) return false;
    return true;
}

// Subspace of F_p^d given by its reduced-echelon basis rows.
struct Subspace {
    std::vector<int> pivots;
    ModMat rows;
};

// Is v in the span? Reduce against the echelon rows and test for zero.
bool contains(const Subspace& u, ModVec v, long p) {
    for (std::size_t i = 0; i < u.rows.size(); ++i) {
        long c = v[u.pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = (v[j] - c * u.rows[i][j]) % p;
            if (v[j] < 0) v[j] += p;
        }
    }
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

ModVec apply(const ModMat& m, const ModVec& v, long p) {
    ModVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + m[i][j] * v[j]) % p;
        r[i] = acc;
    }
    return r;
}

// Enumerates every e-dimensional subspace of F_p^d exactly once: choose pivot
// columns, then run an odometer over the free entries of the reduced echelon
// form.
void for_each_subspace(int d, int e, long p, long& budget,
                       const std::function<void(const Subspace&)>& fn) {
    if (e == 0) {
        fn(Subspace{{}, {}});
        return;
    }
    std::vector<int> piv(e);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        std::vector<bool> is_piv(d, false);
        for (int c : piv) is_piv[c] = true;
        for (int i = 0; i < e; ++i) {
            for (int j = piv[i] + 1; j < d; ++j) {
                if (!is_piv[j]) free_pos.emplace_back(i, j);
            }
        }
        Subspace u;
        u.pivots = piv;
        u.rows.assign(e, ModVec(d, 0));
        for (int i = 0; i < e; ++i) u.rows[i][piv[i]] = 1;
        std::vector<long> vals(free_pos.size(), 0);
        while (true) {
            if (--budget < 0) {
                throw resource_error("subrepresentation enumeration exceeded its budget");
            }
            fn(u);
            std::size_t k = 0;
            for (; k < vals.size(); ++k) {
                vals[k] = (vals[k] + 1) % p;
                u.rows[free_pos[k].first][free_pos[k].second] = vals[k];
                if (vals[k] != 0) break;
            }
            if (k == vals.size()) break;
        }
        // next pivot combination
        int i = e - 1;
        while (i >= 0 && piv[i] == d - e + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < e; ++j) piv[j] = piv[j - 1] + 1;
    }
}

Count gaussian_binomial(int d, int e, long p) {
    if (e < 0 || e > d) return 0;
    mpz_class pm(p), num = 1, den = 1, pd, pe;
    mpz_pow_ui(pd.get_mpz_t(), pm.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(pe.get_mpz_t(), pm.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_class pi = 1;
    for (int i = 0; i < e; ++i) {
        num *= pd - pi;
        den *= pe - pi;
        pi *= pm;
    }
    return num / den;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

bool prime_usable(const DecoratedRep& m, long p) {
    for (const auto& [id, mat] : m.maps) {
        for (std::size_t i = 0; i < mat.rows(); ++i) {
            for (std::size_t j = 0; j < mat.cols(); ++j) {
                if (mat.at(i, j).get_den() % p == 0) return false;
            }
        }
    }
    return true;
}

Count count_subreps_mod_p(const DecoratedRep& m, const std::vector<int>& e, long p) {
    const IceQuiver& q = m.qp.quiver;
    const int nv = q.n();
    if (static_cast<int>(e.size()) != nv) throw input_error("dimension vector of wrong length");
    for (int i = 0; i < nv; ++i) {
        if (e[i] < 0 || e[i] > m.dims[i]) return 0;
    }

    // Arrows acting by zero impose no condition; the others tie their
    // endpoints into one enumeration component.
    std::vector<std::pair<const Arrow*, ModMat>> active;
    for (const Arrow& a : q.arrows()) {
        ModMat mm = matrix_mod_p(m.maps.at(a.id), p);
        if (!mod_mat_is_zero(mm)) active.emplace_back(&a, std::move(mm));
    }
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (int v = 0; v < nv; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (const auto& [a, mm] : active) {
                int s = a->src - 1, t = a->tgt - 1;
                if (s == w && comp[t] < 0) comp[t] = ncomp, stack.push_back(t);
                if (t == w && comp[s] < 0) comp[s] = ncomp, stack.push_back(s);
            }
        }
        ++ncomp;
    }

    Count total = 1;
    long budget = 20'000'000;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < nv; ++v)
            if (comp[v] == c) verts.push_back(v);
        if (verts.size() == 1) {
            total *= gaussian_binomial(m.dims[verts[0]], e[verts[0]], p);
            continue;
        }
        // BFS order so every new vertex is checked against assigned neighbours
        // as soon as possible.
        std::vector<int> order;
        std::vector<bool> seen(nv, false);
        std::vector<int> queue{verts[0]};
        seen[verts[0]] = true;
        while (!queue.empty()) {
            int w = queue.front();
            queue.erase(queue.begin());
            order.push_back(w);
            for (const auto& [a, mm] : active) {
                int s = a->src - 1, t = a->tgt - 1;
                if (s == w && !seen[t] && comp[t] == c) seen[t] = true, queue.push_back(t);
                if (t == w && !seen[s] && comp[s] == c) seen[s] = true, queue.push_back(s);
            }
        }

        std::vector<Subspace> chosen(nv);
        std::vector<bool> assigned(nv, false);
        Count comp_count = 0;
        std::function<void(std::size_t)> rec = [&](std::size_t depth) {
            if (depth == order.size()) {
                comp_count += 1;
                return;
            }
            int v = order[depth];
            for_each_subspace(m.dims[v], e[v], p, budget, [&](const Subspace& u) {
                chosen[v] = u;
                assigned[v] = true;
                // Check each active arrow with both endpoints now assigned:
                // the image of the subspace at the target must land in the
                // subspace at the source.
                for (const auto& [a, mm] : active) {
                    int s = a->src - 1, t = a->tgt - 1;
                    if ((s != v && t != v) || !assigned[s] || !assigned[t]) continue;
                    for (const ModVec& row : chosen[t].rows) {
                        if (!contains(chosen[s], apply(mm, row, p), p)) {
                            assigned[v] = false;
                            return;
                        }
                    }
                }
                rec(depth + 1);
                assigned[v] = false;
            });
        };
        rec(0);
        total *= comp_count;
    }
    return total;
}

Count euler_characteristic(const DecoratedRep& m, const std::vector<int>& e,
                           std::vector<long> primes) {
    const int nv = m.qp.quiver.n();
    if (static_cast<int>(e.size()) != nv) throw input_error("dimension vector of wrong length");
    long deg = 0;
    for (int i = 0; i < nv; ++i) {
        if (e[i] < 0 || e[i] > m.dims[i]) return 0;
        deg += static_cast<long>(e[i]) * (m.dims[i] - e[i]);
    }
    const std::size_t need = static_cast<std::size_t>(deg) + 1;
    if (primes.empty()) {
        for (long c = 2; primes.size() < need; ++c) {
            if (is_prime(c) && prime_usable(m, c)) primes.push_back(c);
        }
    } else {
        if (primes.size() < need) {
            throw input_error("not enough primes for the interpolation degree");
        }
        for (long p : primes) {
            if (!is_prime(p) || !prime_usable(m, p)) {
                throw input_error("unusable prime " + std::to_string(p));
            }
        }
        primes.resize(need);
    }

    // Lagrange interpolation of the counting polynomial, coefficient form.
    std::vector<mpq_class> coeff(need, 0);
    for (std::size_t k = 0; k < need; ++k) {
        Count yk = count_subreps_mod_p(m, e, primes[k]);
        std::vector<mpq_class> basis{1};  // prod_{j != k} (X - p_j)
        mpq_class denom = 1;
        for (std::size_t j = 0; j < need; ++j) {
            if (j == k) continue;
            basis.insert(basis.begin(), 0);
            for (std::size_t t = 0; t + 1 < basis.size(); ++t) {
                basis[t] -= mpq_class(primes[j]) * basis[t + 1];
            }
            denom *= mpq_class(primes[k]) - mpq_class(primes[j]);
        }
        mpq_class scale = mpq_class(yk) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) coeff[t] += basis[t] * scale;
    }
    mpq_class at_one = 0;
    for (auto& c : coeff) {
        c.canonicalize();
        if (c.get_den() != 1) {
            throw check_error("point counts did not interpolate to an integer polynomial");
        }
        at_one += c;
    }
    at_one.canonicalize();
    return at_one.get_num();
}

LaurentPoly f_polynomial_rep(const DecoratedRep& m, const std::vector<long>& primes) {
    const int nv = m.qp.quiver.n();
    LaurentPoly f(nv);
    std::vector<int> e(nv, 0);
    while (true) {
        Count chi = euler_characteristic(m, e, primes);
        if (chi != 0) {
            Rational c(chi);
            f.add_term(e, c);
        }
        int k = 0;
        for (; k < nv; ++k) {
            if (e[k] < m.dims[k]) {
                ++e[k];
                break;
            }
            e[k] = 0;
        }
        if (k == nv) break;
    }
    return f;
}

RationalFunction cluster_character(const DecoratedRep& m, const IceQuiver& q_initial) {
    const int r = m.qp.quiver.n();
    if (q_initial.r() != r) {
        throw input_error("representation and quiver have different mutable parts");
    }
    const int n = q_initial.n();
    std::vector<LaurentPoly> yh;
    for (int j = 1; j <= r; ++j) yh.push_back(hat_y(q_initial, j));
    LaurentPoly f = f_polynomial_rep(m);
    LaurentPoly sum(n);
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(n, c);
        for (int j = 0; j < r; ++j) {
            if (e[j] != 0) term = term * yh[j].pow(e[j]);
        }
        sum = sum + term;
    }
    GVector g = g_vector_rep(m);
    std::vector<int> shift(n, 0);
    for (int j = 0; j < r; ++j) shift[j] = static_cast<int>(g[j]);
    return RationalFunction(sum.mul_monomial(shift));
}

RationalFunction rf_specialize(const LaurentPoly& p,
                               const std::map<int, RationalFunction>& images) {
    const int n = p.nvars();
    RationalFunction acc = RationalFunction::constant(n, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        RationalFunction term = RationalFunction::constant(n, c);
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            auto it = images.find(k + 1);
            RationalFunction img =
                it != images.end() ? it->second : RationalFunction::variable(n, k + 1);
            term = term * img.pow(e[k]);
        }
        acc = acc + term;
    }
    return acc;
}

RationalFunction apply_substitution(const RationalFunction& f,
                                    const std::map<int, RationalFunction>& images) {
    return rf_specialize(f.num(), images) / rf_specialize(f.den(), images);
}

std::map<int, RationalFunction> substitution_map(const IceQuiver& q_initial, int i) {
    if (!q_initial.is_mutable(i)) {
        throw input_error("substitution map requires a mutable vertex");
    }
    BMatrix b = b_matrix(q_initial);
    const int n = q_initial.n();
    LaurentPoly plus = LaurentPoly::constant(n, Rational(1));
    LaurentPoly minus = plus;
    for (int l = 0; l < n; ++l) {
        long bl = b.entries[l][i - 1];
        if (bl > 0) plus = plus * LaurentPoly::variable(n, l + 1).pow(bl);
        if (bl < 0) minus = minus * LaurentPoly::variable(n, l + 1).pow(-bl);
    }
    std::map<int, RationalFunction> images;
    images.emplace(i, RationalFunction(plus + minus, LaurentPoly::variable(n, i)));
    return images;
}

}  // namespace qpmut
