#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpmut/path_algebra.hpp"

namespace qpmut {

// Quiver with potential, with all path computations truncated beyond
// truncation_degree.
struct QP {
    IceQuiver quiver;
    Potential w;
    int truncation_degree = 12;

    static QP make(const IceQuiver& quiver, int trunc);

    bool operator==(const QP& o) const {
        return quiver == o.quiver && w == o.w && truncation_degree == o.truncation_degree;
    }
};

// True when no oriented 2-cycle of the quiver passes through l.
bool is_admissible(const QP& qp, int l);

// True when W has no cycle terms of length <= 2 and the quiver has no
// 2-cycles.
bool is_reduced(const QP& qp);

// Steps (1)-(3) of QP mutation: add composite arrows [b∘a], replace arrows
// incident with l by starred reversals, W~ = [W] + sum a* b* [b∘a].
QP premutate_qp(const QP& qp, int l);

struct ReduceResult {
    QP reduced;
    // Right-equivalence data: image of each surviving arrow inside the input
    // path algebra; applying it to reduced.w plus the deleted quadratic part
    // reproduces the input potential (mod truncation, cyclic equivalence).
    std::map<std::string, PathElement> subst;
    std::vector<std::pair<std::string, std::string>> deleted_pairs;
    Potential deleted_quadratic;
};

ReduceResult reduce_qp(const QP& qp);

ReduceResult mutate_qp(const QP& qp, int l);

QP mutate_qp_sequence(const QP& qp, const std::vector<int>& seq);

}  // namespace qpmut
