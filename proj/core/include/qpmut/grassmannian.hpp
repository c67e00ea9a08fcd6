#pragma once

#include <map>
#include <vector>

#include "qpmut/decorated_rep.hpp"

namespace qpmut {

using Count = mpz_class;

// A prime is usable for point counting when it divides no denominator of the
// representation's matrix entries.
bool prime_usable(const DecoratedRep& m, long p);

// Number of subrepresentations of dimension vector e over F_p. The count
// factors over the connected components of the graph whose edges are the
// arrows acting by a nonzero matrix mod p; isolated vertices contribute a
// Gaussian binomial, the rest are enumerated in reduced echelon form with
// pruning.
Count count_subreps_mod_p(const DecoratedRep& m, const std::vector<int>& e, long p);

// Euler characteristic of the subrepresentation Grassmannian: the point count
// is a polynomial in p of degree at most sum e_i (dim M_i - e_i); it is
// interpolated from deg+1 usable primes (chosen smallest-first when `primes`
// is empty), checked for integer coefficients, and evaluated at 1.
Count euler_characteristic(const DecoratedRep& m, const std::vector<int>& e,
                           std::vector<long> primes = {});

// F_M = sum over dimension vectors e of chi(Gr_e(M)) u^e, in n(Q) variables.
// A nonempty prime list overrides the automatic choice for every dimension
// vector (it must be long enough for the largest interpolation degree).
LaurentPoly f_polynomial_rep(const DecoratedRep& m, const std::vector<long>& primes = {});

// Cluster character x^{g(M,V)} F_M(hat-y) as a rational function in the
// variables of q_initial; m lives over the mutable part of q_initial.
RationalFunction cluster_character(const DecoratedRep& m, const IceQuiver& q_initial);

// Substitutes rational functions for variables (1-based keys; unassigned
// variables map to themselves).
RationalFunction rf_specialize(const LaurentPoly& p,
                               const std::map<int, RationalFunction>& images);
RationalFunction apply_substitution(const RationalFunction& f,
                                    const std::map<int, RationalFunction>& images);

// The change of variables comparing expressions in the cluster of mu_i(seed)
// with the initial cluster: x'_i -> (prod x^[b_i]_+ + prod x^[-b_i]_+) / x_i,
// all other variables fixed.
std::map<int, RationalFunction> substitution_map(const IceQuiver& q_initial, int i);

}  // namespace qpmut
