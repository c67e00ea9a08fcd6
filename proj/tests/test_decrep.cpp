#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpmut/decorated_rep.hpp"
#include "qpmut/verify.hpp"

using namespace qpmut;

namespace {

QP a2_qp() { return QP::make(IceQuiver(2, 2, {{"a", 1, 2}}), 12); }

QP a3_qp() { return QP::make(IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}}), 12); }

QP triangle_qp() {
    QP qp = QP::make(IceQuiver(3, 3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}), 12);
    qp.w.add_cycle({"a", "b", "c"}, Rational(1));
    return qp;
}

// dims (1,1), M_a = [1] over the A2 quiver.
DecoratedRep a2_interval() {
    DecoratedRep m{a2_qp(), {1, 1}, {0, 0}, {}};
    QMatrix id(1, 1);
    id.at(0, 0) = 1;
    m.maps.emplace("a", id);
    m.validate();
    return m;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-3, 3);
    while (true) {
        QMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.at(i, j) = d(rng);
        if (n == 0 || is_invertible(p)) return p;
    }
}

}  // namespace

TEST_CASE("negative simples and simples") {
    QP qp = a2_qp();
    DecoratedRep neg = DecoratedRep::negative_simple(qp, 1);
    CHECK(neg.dims == std::vector<int>{0, 0});
    CHECK(neg.vdims == std::vector<int>{1, 0});
    CHECK(g_vector_rep(neg) == GVector{1, 0});
    CHECK(h_vector_rep(neg) == GVector{0, 0});
    CHECK(e_invariant(neg) == 0);

    DecoratedRep s1 = DecoratedRep::simple(qp, 1);
    CHECK(s1.dims == std::vector<int>{1, 0});
    CHECK(s1.vdims == std::vector<int>{0, 0});
    CHECK(g_vector_rep(s1) == GVector{-1, 1});
    CHECK(h_vector_rep(s1) == GVector{-1, 0});
    CHECK(e_invariant(s1) == 0);

    DecoratedRep s2 = DecoratedRep::simple(qp, 2);
    CHECK(g_vector_rep(s2) == GVector{0, -1});
    CHECK(e_invariant(s2) == 0);
}

TEST_CASE("validation rejects bad data") {
    QP qp = a2_qp();
    DecoratedRep bad{qp, {1, 1}, {0, 0}, {}};
    QMatrix wrong(2, 1);
    bad.maps.emplace("a", wrong);
    CHECK_THROWS(bad.validate());

    // Identity maps around the 3-cycle violate both nilpotency and the
    // Jacobian relations.
    QP tri = triangle_qp();
    DecoratedRep cyc{tri, {1, 1, 1}, {0, 0, 0}, {}};
    QMatrix id(1, 1);
    id.at(0, 0) = 1;
    cyc.maps.emplace("a", id);
    cyc.maps.emplace("b", id);
    cyc.maps.emplace("c", id);
    CHECK_FALSE(is_nilpotent(cyc));
    CHECK_FALSE(check_jacobian_relation(tri, cyc));
    CHECK_THROWS(cyc.validate());

    // Zeroing two of the maps satisfies every relation.
    DecoratedRep ok = cyc;
    ok.maps.at("b") = QMatrix(1, 1);
    ok.maps.at("c") = QMatrix(1, 1);
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("eval_element multiplies matrices in travel order") {
    QP qp = a3_qp();
    DecoratedRep m{qp, {1, 1, 1}, {0, 0, 0}, {}};
    QMatrix two(1, 1), three(1, 1);
    two.at(0, 0) = 2;
    three.at(0, 0) = 3;
    m.maps.emplace("a", two);
    m.maps.emplace("b", three);
    m.validate();

    PathElement ab = PathElement::path(qp.quiver, 12, {"a", "b"});
    QMatrix r = eval_element(m, ab);
    REQUIRE(r.rows() == 1);
    REQUIRE(r.cols() == 1);
    CHECK(r.at(0, 0) == 6);

    // The zero element needs explicit endpoints for its shape.
    QMatrix z = eval_element(m, PathElement(qp.quiver, 12), 1, 3);
    CHECK(z.rows() == 1);
    CHECK(z.cols() == 1);
    CHECK(z.is_zero());
}

TEST_CASE("hom dimensions on hand examples") {
    QP qp = a2_qp();
    DecoratedRep s1 = DecoratedRep::simple(qp, 1);
    DecoratedRep s2 = DecoratedRep::simple(qp, 2);
    DecoratedRep m = a2_interval();

    CHECK(hom_dim(s1, s1) == 1);
    CHECK(hom_dim(s1, s2) == 0);
    CHECK(hom_dim(s2, s1) == 0);
    CHECK(hom_dim(s1, m) == 1);
    CHECK(hom_dim(m, s1) == 0);
    CHECK(hom_dim(m, s2) == 1);
    CHECK(hom_dim(m, m) == 1);
    CHECK(hom_basis(s1, m).size() == 1);
}

TEST_CASE("direct sums: g additive, E detects the non-rigid pair") {
    QP qp = a2_qp();
    DecoratedRep s1 = DecoratedRep::simple(qp, 1);
    DecoratedRep s2 = DecoratedRep::simple(qp, 2);
    DecoratedRep sum = direct_sum(s1, s2);
    sum.validate();
    CHECK(sum.dims == std::vector<int>{1, 1});
    CHECK(g_vector_rep(sum) == GVector{-1, 0});
    // hom = 2, sum of g_i dim M_i = -1.
    CHECK(e_invariant(sum) == 1);
    CHECK(e_invariant(a2_interval()) == 0);
}

TEST_CASE("mutation of a negative simple turns decoration into module") {
    QP qp = a2_qp();
    DecoratedRep neg = DecoratedRep::negative_simple(qp, 2);
    DecoratedRep m = mutate_rep(neg, 2);
    CHECK(m.dims == std::vector<int>{0, 1});
    CHECK(m.vdims == std::vector<int>{0, 0});
    m.validate();
}

TEST_CASE("mutation of the A2 interval module at 2") {
    DecoratedRep m = a2_interval();
    DecoratedRep t = mutate_rep(m, 2);
    CHECK(t.dims == std::vector<int>{1, 0});
    CHECK(t.vdims == std::vector<int>{0, 0});
    t.validate();
}

TEST_CASE("rep mutation is an involution on corpus reps") {
    for (const Scenario& sc : {scenario_a2(), scenario_a3(), scenario_triangle()}) {
        std::vector<DecoratedRep> reps;
        for (int j = 1; j <= sc.qp.quiver.r(); ++j) {
            reps.push_back(DecoratedRep::negative_simple(sc.qp, j));
            reps.push_back(reachable_rep(sc.qp, {j}, j));
        }
        reps.push_back(reachable_rep(sc.qp, {1, 2}, 1));
        for (const DecoratedRep& r : reps) {
            for (int i = 1; i <= sc.qp.quiver.r(); ++i) {
                if (!is_admissible(r.qp, i)) continue;
                DecoratedRep once = mutate_rep(r, i);
                once.validate();
                DecoratedRep twice = relabel_onto(mutate_rep(once, i), sc.qp);
                CHECK(are_isomorphic(twice, r));
            }
        }
    }
}

TEST_CASE("isomorphism is invariant under base change") {
    std::mt19937_64 rng(61);
    QP qp = a3_qp();
    DecoratedRep m = reachable_rep(qp, {2, 1}, 2);
    for (int t = 0; t < 10; ++t) {
        DecoratedRep n = m;
        std::vector<QMatrix> p;
        for (int i = 0; i < 3; ++i) p.push_back(random_invertible(rng, m.dims[i]));
        for (auto& [id, mat] : n.maps) {
            const Arrow& a = qp.quiver.arrow(id);
            mat = p[a.src - 1] * mat * inverse(p[a.tgt - 1]);
        }
        n.validate();
        CHECK(are_isomorphic(m, n));
    }

    // Same dimension vector, different module structure.
    DecoratedRep sum = direct_sum(DecoratedRep::simple(a2_qp(), 1),
                                  DecoratedRep::simple(a2_qp(), 2));
    CHECK_FALSE(are_isomorphic(sum, a2_interval()));
    // Decorations must match too.
    DecoratedRep deco = a2_interval();
    deco.vdims = {1, 0};
    CHECK_FALSE(are_isomorphic(deco, a2_interval()));
}

TEST_CASE("E-invariant symmetrization is symmetric") {
    std::mt19937_64 rng(67);
    QP qp = a3_qp();
    std::vector<DecoratedRep> pool;
    for (int j = 1; j <= 3; ++j) {
        pool.push_back(DecoratedRep::negative_simple(qp, j));
        pool.push_back(DecoratedRep::simple(qp, j));
        pool.push_back(reachable_rep(qp, {j}, j));
    }
    pool.push_back(reachable_rep(qp, {1, 2}, 1));
    pool.push_back(reachable_rep(qp, {2, 3}, 2));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const DecoratedRep& m = pool[pick(rng)];
        const DecoratedRep& n = pool[pick(rng)];
        CHECK(e_sym(m, n) == e_sym(n, m));
        CHECK(e_sym(m, n) == e_inj(m, n) + e_inj(n, m));
        CHECK(e_sym(m, m) == 2 * e_invariant(m));
    }
}

TEST_CASE("g and h satisfy h_i = min(0, g_i) on reachable reps") {
    QP qp = triangle_qp();
    for (const auto& seq :
         std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}, {3, 1}, {1, 2, 3}}) {
        for (int j = 1; j <= 3; ++j) {
            DecoratedRep r = reachable_rep(qp, seq, j);
            CHECK(e_invariant(r) == 0);
            GVector g = g_vector_rep(r);
            GVector h = h_vector_rep(r);
            for (int i = 0; i < 3; ++i) CHECK(h[i] == std::min(0L, g[i]));
        }
    }
}
