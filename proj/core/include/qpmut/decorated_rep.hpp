#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpmut/linalg.hpp"
#include "qpmut/qp.hpp"
#include "qpmut/seed.hpp"

namespace qpmut {

// Decorated representation (M, V) of a QP: a nilpotent Jacobian module M given
// by per-vertex dimensions and per-arrow matrices, plus decoration dimensions.
// The matrix of arrow a has shape dim M_{s(a)} x dim M_{t(a)} and represents
// M_a : M_{t(a)} -> M_{s(a)} (right modules).
struct DecoratedRep {
    QP qp;
    std::vector<int> dims;
    std::vector<int> vdims;
    std::map<std::string, QMatrix> maps;

    static DecoratedRep negative_simple(const QP& qp, int i);
    static DecoratedRep simple(const QP& qp, int i);

    // Shape/nilpotency/Jacobian checks; throws on violation.
    void validate() const;
};

// Direct sum, used by tests of the F-polynomial product rule.
DecoratedRep direct_sum(const DecoratedRep& m, const DecoratedRep& n);

// M_sigma as a matrix M_{tgt} -> M_{src}; all paths of sigma must share
// source and target. Explicit vertices cover the zero element.
QMatrix eval_element(const DecoratedRep& m, const PathElement& sigma);
QMatrix eval_element(const DecoratedRep& m, const PathElement& sigma, int src, int tgt);

bool check_jacobian_relation(const QP& qp, const DecoratedRep& rep);
bool is_nilpotent(const DecoratedRep& rep);

struct ABGMaps {
    // alpha: M_in -> M_l over arrows out of l; beta: M_l -> M_out over arrows
    // into l; gamma: M_out -> M_in with blocks M_{d_{ab} W}.
    QMatrix alpha, beta, gamma;
    std::vector<Arrow> out_arrows;  // arrows with source l (M_in summands)
    std::vector<Arrow> in_arrows;   // arrows with target l (M_out summands)
};

ABGMaps abg_maps(const DecoratedRep& m, int l);

DecoratedRep mutate_rep(const DecoratedRep& m, int l);

long hom_dim(const DecoratedRep& m, const DecoratedRep& n);
// Basis of intertwiners, one matrix per vertex for each basis element.
std::vector<std::vector<QMatrix>> hom_basis(const DecoratedRep& m, const DecoratedRep& n);

GVector g_vector_rep(const DecoratedRep& m);
GVector h_vector_rep(const DecoratedRep& m);

long e_invariant(const DecoratedRep& m);
long e_inj(const DecoratedRep& m, const DecoratedRep& n);
long e_sym(const DecoratedRep& m, const DecoratedRep& n);

// Monte Carlo isomorphism test: random combinations of the intertwiner basis,
// fixed seed, `draws` attempts.
bool are_isomorphic(const DecoratedRep& m, const DecoratedRep& n, int draws = 5,
                    unsigned long seed = 12345);

// Renames the arrows of m's QP to those of `target` by matching (src, tgt)
// pairs; requires a unique matching and cyclically equal potentials. Used to
// compare reps that returned to the same quiver through mutation chains.
DecoratedRep relabel_onto(const DecoratedRep& m, const QP& target);

}  // namespace qpmut
