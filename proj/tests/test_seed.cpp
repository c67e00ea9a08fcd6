#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "qpmut/explore.hpp"
#include "qpmut/grassmannian.hpp"
#include "qpmut/io.hpp"
#include "qpmut/seed.hpp"

using namespace qpmut;

namespace {

IceQuiver a2() { return IceQuiver(2, 2, {{"a", 1, 2}}); }
IceQuiver a3() { return IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}}); }

// Cancels the denominator of a value known to be a Laurent polynomial; the
// rational-function normalization deliberately has no polynomial gcd.
RationalFunction force_laurent(const RationalFunction& v) {
    if (v.is_laurent()) return v;
    return RationalFunction(laurent_div_exact(v.num(), v.den()));
}

}  // namespace

TEST_CASE("exchange relation, coefficient-free A2") {
    Seed s = Seed::initial(a2());
    Seed m = mutate_seed(s, 1);
    CHECK(print_canonical(m.cluster[0]) == "(x2 + 1)/(x1)");
    CHECK(m.cluster[1] == s.cluster[1]);
    // Involution up to arrow renaming: values and b-matrix return.
    Seed back = mutate_seed(m, 1);
    CHECK(back.cluster == s.cluster);
    CHECK(b_matrix(back.quiver) == b_matrix(s.quiver));
}

TEST_CASE("exchange relation, A2 with principal coefficients") {
    IceQuiver q = principal_extension(a2());
    Seed s = Seed::initial(q);
    Seed m = mutate_seed(s, 1);
    // Out-arrows of 1 contribute x2, in-arrows (the frozen 3 -> 1) contribute
    // x3. The exchange binomial has no products across the two sides.
    CHECK(print_canonical(m.cluster[0]) == "(x2 + x3)/(x1)");
}

TEST_CASE("five-periodicity of A2") {
    Seed s = Seed::initial(principal_extension(a2()));
    Seed t = s;
    for (int k = 0; k < 5; ++k) t = mutate_seed(t, k % 2 == 0 ? 1 : 2);
    // After five alternating mutations the cluster returns as a set with the
    // two variables swapped.
    CHECK(t.cluster[0] == s.cluster[1]);
    CHECK(t.cluster[1] == s.cluster[0]);
}

TEST_CASE("laurent phenomenon along random walks") {
    std::mt19937_64 rng(41);
    Seed s = Seed::initial(principal_extension(a3()));
    std::uniform_int_distribution<int> vd(1, 3);
    for (int t = 0; t < 60; ++t) {
        s = mutate_seed(s, vd(rng));
        for (const RationalFunction& v : s.cluster) {
            CHECK(v.is_laurent());
            // Integer coefficients.
            LaurentPoly l = v.as_laurent();
            for (const auto& [e, c] : l.terms()) CHECK(is_integer(c));
        }
    }
}

TEST_CASE("hat_y") {
    IceQuiver q = principal_extension(a2());
    CHECK(print_canonical(hat_y(q, 1)) == "x2^-1*x3");
    CHECK(print_canonical(hat_y(q, 2)) == "x1*x4");
    CHECK(hat_y(IceQuiver(2, 2, {}), 1) == LaurentPoly::constant(2, Rational(1)));
}

TEST_CASE("F-polynomials") {
    IceQuiver q = principal_extension(a2());
    Seed s = Seed::initial(q);
    CHECK(print_canonical(f_polynomial_of_variable(s.cluster[0], 2), "u") == "1");

    Seed m = mutate_seed(s, 1);
    LaurentPoly f = f_polynomial_of_variable(m.cluster[0], 2);
    CHECK(print_canonical(f, "u") == "u1 + 1");
    CHECK(f.constant_term() == 1);
}

TEST_CASE("F-polynomial constant term is 1 on a depth-6 sweep") {
    for (IceQuiver base : {a2(), a3()}) {
        IceQuiver q = principal_extension(base);
        ExploreResult ex = explore(Seed::initial(q), 6);
        for (const Seed& s : ex.seeds) {
            for (const RationalFunction& v : s.cluster) {
                CHECK(f_polynomial_of_variable(v, q.r()).constant_term() == 1);
            }
        }
    }
}

TEST_CASE("g-vectors: direct, recursive, and the hand example") {
    IceQuiver q = principal_extension(a2());
    Seed s = Seed::initial(q);
    CHECK(g_vector_direct(s.cluster[0], q) == GVector{1, 0});
    CHECK(g_vector_direct(s.cluster[1], q) == GVector{0, 1});

    Seed m = mutate_seed(s, 1);
    CHECK(g_vector_direct(m.cluster[0], q) == GVector{-1, 1});

    // The recursion changes the reference cluster of one fixed element: it
    // maps g-vectors with respect to the seed to g-vectors with respect to
    // the mutated seed. Re-express the element through the exchange
    // substitution to compute the right-hand side directly.
    BMatrix b = b_matrix(q);
    IceQuiver q1 = mutate_quiver(q, 1);
    auto to_mutated_coords = [&](const RationalFunction& z) {
        return force_laurent(apply_substitution(z, substitution_map(q1, 1)));
    };
    // z = x1: g = e1 relative to the seed, (-1, 0) relative to the mutated one.
    RationalFunction x1 = RationalFunction::variable(q.n(), 1);
    CHECK(g_vector_direct(to_mutated_coords(x1), q1) == GVector{-1, 0});
    CHECK(g_vector_recursive(GVector{1, 0}, b, 1) == GVector{-1, 0});
    // z = x1': g = (-1, 1) relative to the seed, e1 relative to the mutated one.
    CHECK(g_vector_direct(to_mutated_coords(m.cluster[0]), q1) == GVector{1, 0});
    CHECK(g_vector_recursive(GVector{-1, 1}, b, 1) == GVector{1, 0});
}

TEST_CASE("recursive g-vector agrees with direct on every explored edge") {
    for (IceQuiver base : {a2(), a3()}) {
        IceQuiver q = principal_extension(base);
        ExploreResult ex = explore(Seed::initial(q), 6);
        REQUIRE(ex.closure);
        const int r = q.r();
        for (const ExploreEdge& e : ex.edges) {
            // Reference clusters: the visited seed's quiver t and its
            // mutation t'. Test elements are written in t-coordinates; the
            // exchange substitution re-expresses them in t'-coordinates.
            IceQuiver t = ex.seeds[e.from].quiver;
            IceQuiver t2 = mutate_quiver(t, e.vertex);
            BMatrix b = b_matrix(t);
            auto phi = substitution_map(t2, e.vertex);
            std::vector<RationalFunction> zs;
            for (int j = 1; j <= r; ++j) {
                zs.push_back(RationalFunction::variable(q.n(), j));
                zs.push_back(mutate_seed(Seed::initial(t), j).cluster[j - 1]);
            }
            for (const RationalFunction& z : zs) {
                GVector g = g_vector_direct(force_laurent(z), t);
                RationalFunction z2 = force_laurent(apply_substitution(z, phi));
                CHECK(g_vector_recursive(g, b, e.vertex) == g_vector_direct(z2, t2));
            }
        }
    }
}

TEST_CASE("general-route g-vector matches the principal route") {
    // Full-rank non-principal coefficients: same quiver, bottom block twice
    // the identity, still rank 2.
    IceQuiver q = principal_extension(a2());
    Seed s = mutate_seed(mutate_seed(Seed::initial(q), 1), 2);
    // Route through the generic linear-system extraction by handing the same
    // variables to a quiver whose b-matrix is full rank but not principal.
    std::vector<Arrow> arrows = q.arrows();
    arrows.push_back({"g1", 3, 1});
    arrows.push_back({"g2", 4, 2});
    IceQuiver q2(4, 2, std::move(arrows));
    Seed s2 = Seed::initial(q2);
    Seed m2 = mutate_seed(s2, 1);
    GVector g = g_vector_direct(m2.cluster[0], q2);
    CHECK(g == GVector{-1, 1});
}

TEST_CASE("y-seeds") {
    IceQuiver q = principal_extension(a2());
    Seed s = Seed::initial(q);
    YSeed ys = y_seed_from_seed(s);
    REQUIRE(ys.y.size() == 2);
    CHECK(ys.y[0] == TropicalElement::generator(2, 0));
    CHECK(ys.y[1] == TropicalElement::generator(2, 1));

    // Neutral coefficients stay neutral away from the mutated vertex.
    YSeed ones{ys.quiver, {TropicalElement::one(2), TropicalElement::one(2)}};
    YSeed m1 = mutate_y_seed(ones, 1);
    CHECK(m1.y[0] == TropicalElement::one(2));
    CHECK(m1.y[1] == TropicalElement::one(2));

    // mutate at 1: y1' = y1^-1; arrow 1 -> 2 means y2' = y2 y1 (y1 + 1)^-1.
    YSeed m = mutate_y_seed(ys, 1);
    CHECK(m.y[0] == ys.y[0].inverse());
    CHECK(m.y[1] == tropical_mul(ys.y[1], ys.y[0]));  // (u1 + 1) = 1 tropically

    // Involution.
    YSeed back = mutate_y_seed(m, 1);
    CHECK(back.y == ys.y);
}

TEST_CASE("y-seed mutation commutes with y_seed_from_seed") {
    std::mt19937_64 rng(47);
    Seed s = Seed::initial(principal_extension(a3()));
    std::uniform_int_distribution<int> vd(1, 3);
    for (int t = 0; t < 40; ++t) {
        int i = vd(rng);
        YSeed lhs = y_seed_from_seed(mutate_seed(s, i));
        YSeed rhs = mutate_y_seed(y_seed_from_seed(s), i);
        CHECK(lhs.y == rhs.y);
        CHECK(b_matrix(lhs.quiver) == b_matrix(rhs.quiver));
        s = mutate_seed(s, i);
    }
}

TEST_CASE("explore counts") {
    ExploreResult a2r = explore(Seed::initial(principal_extension(a2())), 6);
    CHECK(a2r.distinct_clusters == 5);
    CHECK(a2r.closure);

    ExploreResult a3r = explore(Seed::initial(principal_extension(a3())), 10);
    CHECK(a3r.distinct_clusters == 14);
    CHECK(a3r.distinct_variables == 9);  // 6 non-initial + 3 initial
    CHECK(a3r.closure);

    ExploreResult d0 = explore(Seed::initial(principal_extension(a2())), 0);
    CHECK(d0.distinct_clusters == 1);
    CHECK_FALSE(d0.closure);
}

TEST_CASE("explore caps flag partial results") {
    ExploreResult r = explore(Seed::initial(principal_extension(a3())), 10, 3);
    CHECK(r.capped);
    CHECK_FALSE(r.closure);
    CHECK(r.distinct_clusters <= 3);
}

TEST_CASE("naive recompute oracle for the cluster counts") {
    // Independent BFS that compares clusters as sets of values with
    // cross-multiplication equality, no canonical serialization involved.
    for (auto [base, expected] : {std::pair{a2(), 5UL}, std::pair{a3(), 14UL}}) {
        IceQuiver q = principal_extension(base);
        std::vector<Seed> nodes{Seed::initial(q)};
        auto same_cluster = [&](const Seed& x, const Seed& y) {
            std::vector<bool> used(y.cluster.size(), false);
            for (const RationalFunction& v : x.cluster) {
                bool found = false;
                for (std::size_t k = 0; k < y.cluster.size() && !found; ++k) {
                    if (!used[k] && v == y.cluster[k]) used[k] = found = true;
                }
                if (!found) return false;
            }
            return true;
        };
        for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
            for (int i = 1; i <= q.r(); ++i) {
                Seed nb = mutate_seed(nodes[cur], i);
                bool known = false;
                for (const Seed& existing : nodes) {
                    if (same_cluster(nb, existing)) {
                        known = true;
                        break;
                    }
                }
                if (!known) nodes.push_back(nb);
            }
            REQUIRE(nodes.size() <= 2 * expected);
        }
        CHECK(nodes.size() == expected);
    }
}
