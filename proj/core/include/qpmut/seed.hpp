#pragma once

#include <vector>

#include "qpmut/quiver.hpp"
#include "qpmut/rational_function.hpp"
#include "qpmut/tropical.hpp"

namespace qpmut {

using GVector = std::vector<long>;

// A seed: ice quiver plus one cluster variable per mutable vertex, each a
// rational function in the initial variables x_1..x_n.
struct Seed {
    IceQuiver quiver;
    std::vector<RationalFunction> cluster;

    static Seed initial(const IceQuiver& q);
    bool operator==(const Seed& o) const {
        if (!(quiver == o.quiver) || cluster.size() != o.cluster.size()) return false;
        for (std::size_t j = 0; j < cluster.size(); ++j)
            if (cluster[j] != o.cluster[j]) return false;
        return true;
    }
};

struct YSeed {
    IceQuiver quiver;  // mutable part only (r = n)
    std::vector<TropicalElement> y;

    bool operator==(const YSeed& o) const = default;
};

// Exchange relation x_i' = (prod over arrows out of i + prod over arrows into
// i) / x_i, with frozen vertices contributing their generators.
Seed mutate_seed(const Seed& s, int i);

// hat-y_j = prod_l x_l^{b_lj} over all vertices l.
LaurentPoly hat_y(const IceQuiver& q, int j);

// Specializes a principal-coefficients cluster variable at x_1=..=x_r=1 and
// returns the F-polynomial in r variables (u_j standing for x_{r+j}).
LaurentPoly f_polynomial_of_variable(const RationalFunction& v, int r);

// g such that v = x^g R(hat-y) with R primitive; requires full-rank B-matrix.
GVector g_vector_direct(const RationalFunction& v, const IceQuiver& q_initial);

// One mutation step of the g-vector recursion at vertex i.
GVector g_vector_recursive(const GVector& g, const BMatrix& b, int i);

YSeed y_seed_from_seed(const Seed& s);
YSeed mutate_y_seed(const YSeed& ys, int i);

}  // namespace qpmut
