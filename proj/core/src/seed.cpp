#include "qpmut/seed.hpp"

#include <map>

#include "qpmut/linalg.hpp"

namespace qpmut {

Seed Seed::initial(const IceQuiver& q) {
    Seed s;
    s.quiver = q;
    for (int j = 1; j <= q.r(); ++j) {
        s.cluster.push_back(RationalFunction::variable(q.n(), j));
    }
    return s;
}

namespace {

RationalFunction variable_of(const Seed& s, int v) {
    if (s.quiver.is_mutable(v)) return s.cluster[v - 1];
    return RationalFunction::variable(s.quiver.n(), v);
}

}  // namespace

Seed mutate_seed(const Seed& s, int i) {
    if (!s.quiver.is_mutable(i)) {
        throw mutation_domain_error("seed mutation at non-mutable vertex " + std::to_string(i));
    }
    const int n = s.quiver.n();
    RationalFunction out = RationalFunction::constant(n, Rational(1));
    RationalFunction in = out;
    for (const Arrow& a : s.quiver.arrows_from(i)) out = out * variable_of(s, a.tgt);
    for (const Arrow& a : s.quiver.arrows_into(i)) in = in * variable_of(s, a.src);
    Seed t;
    t.quiver = mutate_quiver(s.quiver, i);
    t.cluster = s.cluster;
    RationalFunction v = (out + in) / s.cluster[i - 1];
    if (!v.is_laurent()) {
        // Laurent phenomenon: the numerator must be exactly divisible by the
        // polynomial part of the denominator. No polynomial gcd is used
        // anywhere else, so the cancellation happens here, by exact division.
        v = RationalFunction(laurent_div_exact(v.num(), v.den()));
    }
    t.cluster[i - 1] = v;
    return t;
}

LaurentPoly hat_y(const IceQuiver& q, int j) {
    if (j < 1 || j > q.r()) throw mutation_domain_error("hat_y index out of range");
    BMatrix b = b_matrix(q);
    LaurentPoly::Exponents e(q.n());
    for (int l = 0; l < q.n(); ++l) e[l] = static_cast<int>(b.entries[l][j - 1]);
    return LaurentPoly::monomial(q.n(), e);
}

LaurentPoly f_polynomial_of_variable(const RationalFunction& v, int r) {
    if (v.nvars() != 2 * r) {
        throw dimension_error("f_polynomial_of_variable expects principal coefficients (2r variables)");
    }
    LaurentPoly vl = v.as_laurent();
    std::map<int, LaurentPoly> ones;
    for (int j = 1; j <= r; ++j) ones.emplace(j, LaurentPoly::constant(2 * r, Rational(1)));
    LaurentPoly f2 = specialize(vl, ones);
    LaurentPoly f(r);
    for (const auto& [e, c] : f2.terms()) {
        LaurentPoly::Exponents eu(r);
        for (int k = 0; k < r; ++k) {
            if (e[k] != 0) throw internal_error("F-polynomial: residual initial variable");
            if (e[r + k] < 0) throw internal_error("F-polynomial is not a polynomial");
            eu[k] = e[r + k];
        }
        f.add_term(eu, c);
    }
    return f;
}

namespace {

bool is_principal(const BMatrix& b) {
    if (b.n != 2 * b.r) return false;
    for (int i = 0; i < b.r; ++i)
        for (int j = 0; j < b.r; ++j)
            if (b.entries[b.r + i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace

GVector g_vector_direct(const RationalFunction& v, const IceQuiver& q_initial) {
    const int n = q_initial.n(), r = q_initial.r();
    LaurentPoly vl = v.as_laurent();
    if (vl.is_zero()) throw domain_error("g-vector of zero");
    BMatrix b = b_matrix(q_initial);

    if (is_principal(b)) {
        LaurentPoly f = f_polynomial_of_variable(v, r);
        std::map<int, LaurentPoly> ys;
        for (int j = 1; j <= r; ++j) ys.emplace(j, hat_y(q_initial, j));
        LaurentPoly fy(n);
        for (const auto& [e, c] : f.terms()) {
            LaurentPoly::Exponents e2(n, 0);
            for (int k = 0; k < r; ++k) e2[k] = e[k];
            fy.add_term(e2, c);
        }
        fy = specialize(fy, ys);
        LaurentPoly mono = laurent_div_exact(vl, fy);
        if (!mono.is_monomial()) {
            throw check_error("g-vector extraction failed: quotient by F(hat-y) not a monomial");
        }
        const auto& e = mono.leading().first;
        return GVector(e.begin(), e.begin() + r);
    }
    QMatrix B(n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) B.at(i, j) = b.entries[i][j];
    if (rank(B) != static_cast<std::size_t>(r)) {
        throw check_error("g_vector_direct requires a full-rank B-matrix");
    }

    // Each term exponent must be g + B e with e the exponent of a term of the
    // primitive factor R; solve for all e relative to the first term, then
    // shift so min_k e_k = 0 (primitivity) and read off g.
    const LaurentPoly::Exponents& e0 = vl.terms().begin()->first;
    std::vector<std::vector<Rational>> es;
    for (const auto& [e, c] : vl.terms()) {
        QMatrix d(n, 1);
        for (int k = 0; k < n; ++k) d.at(k, 0) = e[k] - e0[k];
        auto x = solve(B, d);
        if (!x) throw check_error("g-vector extraction failed: exponent outside the hat-y lattice");
        std::vector<Rational> ev(r);
        for (int k = 0; k < r; ++k) {
            ev[k] = x->at(k, 0);
            if (!is_integer(ev[k])) {
                throw check_error("g-vector extraction failed: non-integral hat-y exponent");
            }
        }
        es.push_back(std::move(ev));
    }
    std::vector<Rational> shift = es[0];
    for (const auto& ev : es)
        for (int k = 0; k < r; ++k) shift[k] = std::min(shift[k], ev[k]);
    GVector g(r);
    for (int k = 0; k < r; ++k) {
        Rational gk = e0[k];
        for (int j = 0; j < r; ++j) gk -= Rational(b.entries[k][j]) * (es[0][j] - shift[j]);
        if (!is_integer(gk)) throw check_error("non-integral g-vector component");
        g[k] = static_cast<long>(gk.get_num().get_si());
    }
    return g;
}

GVector g_vector_recursive(const GVector& g, const BMatrix& b, int i) {
    if (i < 1 || i > b.r) throw mutation_domain_error("g-vector recursion at invalid index");
    const int k = i - 1;
    GVector out = g;
    out[k] = -g[k];
    for (int j = 0; j < b.r; ++j) {
        if (j == k) continue;
        long bji = b.entries[j][k];
        out[j] = g[j] + std::max(bji, 0L) * g[k] - bji * std::min(g[k], 0L);
    }
    return out;
}

YSeed y_seed_from_seed(const Seed& s) {
    const int n = s.quiver.n(), r = s.quiver.r(), m = n - r;
    BMatrix b = b_matrix(s.quiver);
    YSeed ys;
    std::vector<Arrow> mut;
    for (const Arrow& a : s.quiver.arrows()) {
        if (s.quiver.is_mutable(a.src) && s.quiver.is_mutable(a.tgt)) mut.push_back(a);
    }
    ys.quiver = IceQuiver(r, r, std::move(mut));
    for (int j = 0; j < r; ++j) {
        std::vector<long> e(m);
        for (int i = 0; i < m; ++i) e[i] = b.entries[r + i][j];
        ys.y.emplace_back(std::move(e));
    }
    return ys;
}

YSeed mutate_y_seed(const YSeed& ys, int i) {
    const int r = ys.quiver.r();
    if (i < 1 || i > r) throw mutation_domain_error("Y-seed mutation at invalid vertex");
    const int m = ys.y.empty() ? 0 : ys.y[0].size();
    const TropicalElement one = TropicalElement::one(m);
    const TropicalElement& yi = ys.y[i - 1];
    const TropicalElement yi_plus_one = tropical_add(yi, one);

    std::map<int, long> from_i, into_i;
    for (const Arrow& a : ys.quiver.arrows()) {
        if (a.src == i) ++from_i[a.tgt];
        if (a.tgt == i) ++into_i[a.src];
    }
    YSeed out;
    out.quiver = mutate_quiver(ys.quiver, i);
    out.y = ys.y;
    out.y[i - 1] = yi.inverse();
    for (int j = 1; j <= r; ++j) {
        if (j == i) continue;
        if (auto it = from_i.find(j); it != from_i.end()) {
            long cnt = it->second;
            out.y[j - 1] = tropical_mul(tropical_mul(ys.y[j - 1], yi.pow(cnt)),
                                        yi_plus_one.pow(-cnt));
        } else if (auto it2 = into_i.find(j); it2 != into_i.end()) {
            out.y[j - 1] = tropical_mul(ys.y[j - 1], yi_plus_one.pow(it2->second));
        }
    }
    return out;
}

}  // namespace qpmut
