#pragma once

#include <string>
#include <vector>

#include "qpmut/decorated_rep.hpp"
#include "qpmut/explore.hpp"

namespace qpmut {

// A named base QP plus the sweep depth; the corpus scenarios are the two
// linear orientations (zero potential) and the 3-cycle with its cubic
// potential.
struct Scenario {
    std::string name;
    QP qp;
    int default_depth = 5;
};

Scenario scenario_a2();
Scenario scenario_a3();
Scenario scenario_triangle();
Scenario scenario_by_name(const std::string& name);

struct CheckResult {
    std::string name;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;
    double seconds = 0.0;

    bool ok() const { return failures == 0; }
    void record(bool pass, const std::string& payload);
    void merge(const CheckResult& o);
};

struct Report {
    std::string scenario;
    int depth = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

std::string report_to_json(const Report& r);

// All stepwise-admissible mutation sequences of length <= depth with no
// immediate repeats (mutation at a vertex is an involution), empty sequence
// included.
std::vector<std::vector<int>> admissible_sequences(const QP& qp, int depth);

// Lockstep comparison along one sequence: the algebra side mutates the
// principal-coefficients seed, the representation side carries each negative
// simple back from the mutated QP; F-polynomials, g-vectors, the h-vector
// relation h_i = min(0, g_i) and E = 0 must agree variable by variable.
CheckResult run_matched_sequence(const Scenario& sc, const std::vector<int>& seq);

// Reachable cluster-variable rep over the base QP: negative simple at j over
// mutate_qp_sequence(qp, seq), mutated back along the reversed sequence and
// relabelled onto the base QP.
DecoratedRep reachable_rep(const QP& qp, const std::vector<int>& seq, int j);

bool check_sign_coherence(const std::vector<GVector>& gs);
// The cluster's g-vectors form a Z-basis (determinant +-1).
bool check_g_basis(const std::vector<GVector>& gs);

Report run_verification(const Scenario& sc, int depth, int jobs = 1, int iso_draws = 5,
                        unsigned long iso_seed = 12345);

}  // namespace qpmut
