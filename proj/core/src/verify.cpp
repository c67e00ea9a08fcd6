#include "qpmut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "json.hpp"
#include "qpmut/grassmannian.hpp"
#include "qpmut/io.hpp"

namespace qpmut {

namespace {

QP corpus_qp(int n, std::vector<Arrow> arrows, const std::vector<PathWord>& cycles) {
    QP qp = QP::make(IceQuiver(n, n, std::move(arrows)), 12);
    for (const PathWord& w : cycles) qp.w.add_cycle(w, Rational(1));
    return qp;
}

std::string seq_string(const std::vector<int>& seq) {
    std::string s = "[";
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(seq[k]);
    }
    return s + "]";
}

std::string gvec_string(const GVector& g) {
    std::string s = "(";
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(g[k]);
    }
    return s + ")";
}

Rational determinant(const std::vector<GVector>& gs) {
    const std::size_t r = gs.size();
    QMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (gs[i].size() != r) throw dimension_error("g-vector of wrong length");
        for (std::size_t j = 0; j < r; ++j) m.at(i, j) = Rational(gs[i][j]);
    }
    Rational det(1);
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && m.at(piv, col) == 0) ++piv;
        if (piv == r) return Rational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < r; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t i = col + 1; i < r; ++i) {
            Rational f = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < r; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

Scenario scenario_a2() {
    return {"a2", corpus_qp(2, {{"a", 1, 2}}, {}), 5};
}

Scenario scenario_a3() {
    return {"a3", corpus_qp(3, {{"a", 1, 2}, {"b", 2, 3}}, {}), 6};
}

Scenario scenario_triangle() {
    return {"triangle", corpus_qp(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}, {{"a", "b", "c"}}),
            5};
}

Scenario scenario_by_name(const std::string& name) {
    if (name == "a2") return scenario_a2();
    if (name == "a3") return scenario_a3();
    if (name == "triangle") return scenario_triangle();
    throw input_error("unknown scenario '" + name + "' (expected a2, a3, or triangle)");
}

void CheckResult::record(bool pass, const std::string& payload) {
    if (pass) {
        ++passes;
    } else {
        ++failures;
        if (counterexamples.size() < 20) counterexamples.push_back(payload);
    }
}

void CheckResult::merge(const CheckResult& o) {
    passes += o.passes;
    failures += o.failures;
    for (const std::string& c : o.counterexamples) {
        if (counterexamples.size() < 20) counterexamples.push_back(c);
    }
    seconds += o.seconds;
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.ok(); });
}

std::string report_to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"passes", c.passes},
                          {"failures", c.failures},
                          {"counterexamples", c.counterexamples},
                          {"seconds", c.seconds}});
    }
    nlohmann::json j = {{"schema_version", 1},
                        {"scenario", r.scenario},
                        {"depth", r.depth},
                        {"ok", r.ok()},
                        {"checks", checks}};
    return j.dump(2);
}

std::vector<std::vector<int>> admissible_sequences(const QP& qp, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // DFS over the prefix tree; mutation at a vertex is an involution, so
    // immediate repeats are skipped.
    std::function<void(const QP&, int)> rec = [&](const QP& node, int rem) {
        out.push_back(cur);
        if (rem == 0) return;
        for (int i = 1; i <= node.quiver.r(); ++i) {
            if (!cur.empty() && cur.back() == i) continue;
            if (!is_admissible(node, i)) continue;
            cur.push_back(i);
            rec(mutate_qp(node, i).reduced, rem - 1);
            cur.pop_back();
        }
    };
    rec(qp, depth);
    return out;
}

DecoratedRep reachable_rep(const QP& qp, const std::vector<int>& seq, int j) {
    QP qt = mutate_qp_sequence(qp, seq);
    DecoratedRep m = DecoratedRep::negative_simple(qt, j);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) m = mutate_rep(m, *it);
    return relabel_onto(m, qp);
}

CheckResult run_matched_sequence(const Scenario& sc, const std::vector<int>& seq) {
    CheckResult res{"matched_sequences"};
    const int r = sc.qp.quiver.r();
    IceQuiver qinit = principal_extension(sc.qp.quiver);
    Seed s = Seed::initial(qinit);
    for (int i : seq) s = mutate_seed(s, i);

    for (int j = 1; j <= r; ++j) {
        std::string where = sc.name + " seq=" + seq_string(seq) + " var=" + std::to_string(j);
        LaurentPoly f_alg = f_polynomial_of_variable(s.cluster[j - 1], r);
        GVector g_alg = g_vector_direct(s.cluster[j - 1], qinit);

        DecoratedRep m = reachable_rep(sc.qp, seq, j);
        LaurentPoly f_rep = f_polynomial_rep(m);
        GVector g_rep = g_vector_rep(m);
        GVector h_rep = h_vector_rep(m);
        long e = e_invariant(m);

        res.record(f_alg == f_rep, where + ": F mismatch: " + print_canonical(f_alg, "u") +
                                       " vs " + print_canonical(f_rep, "u"));
        res.record(g_alg == g_rep, where + ": g mismatch: " + gvec_string(g_alg) + " vs " +
                                       gvec_string(g_rep));
        bool h_ok = true;
        for (int i = 0; i < r; ++i) h_ok = h_ok && h_rep[i] == std::min(0L, g_rep[i]);
        res.record(h_ok, where + ": h relation failed: h=" + gvec_string(h_rep) +
                             " g=" + gvec_string(g_rep));
        res.record(e == 0, where + ": E = " + std::to_string(e));
    }
    return res;
}

bool check_sign_coherence(const std::vector<GVector>& gs) {
    if (gs.empty()) return true;
    const std::size_t r = gs.front().size();
    for (std::size_t i = 0; i < r; ++i) {
        bool has_pos = false, has_neg = false;
        for (const GVector& g : gs) {
            if (g[i] > 0) has_pos = true;
            if (g[i] < 0) has_neg = true;
        }
        if (has_pos && has_neg) return false;
    }
    return true;
}

bool check_g_basis(const std::vector<GVector>& gs) {
    Rational d = determinant(gs);
    return d == 1 || d == -1;
}

Report run_verification(const Scenario& sc, int depth, int jobs, int iso_draws,
                        unsigned long iso_seed) {
    Report report;
    report.scenario = sc.name;
    report.depth = depth;
    const int r = sc.qp.quiver.r();
    IceQuiver qinit = principal_extension(sc.qp.quiver);

    std::vector<std::vector<int>> seqs = admissible_sequences(sc.qp, depth);

    // Lockstep algebra/representation comparison, split across workers.
    {
        Timer t;
        CheckResult matched{"matched_sequences"};
        int workers = std::max(1, jobs);
        std::vector<std::future<CheckResult>> futs;
        for (int w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w]() {
                CheckResult part{"matched_sequences"};
                for (std::size_t k = w; k < seqs.size(); k += workers) {
                    part.merge(run_matched_sequence(sc, seqs[k]));
                }
                return part;
            }));
        }
        for (auto& f : futs) matched.merge(f.get());
        matched.seconds = t.seconds();
        report.checks.push_back(std::move(matched));
    }

    // Cluster sweep for the g-vector checks.
    ExploreResult ex = explore(Seed::initial(qinit), depth);
    std::vector<std::vector<GVector>> cluster_gs;
    std::vector<std::vector<std::string>> cluster_names;
    for (const Seed& seed : ex.seeds) {
        std::vector<GVector> gs;
        std::vector<std::string> names;
        for (const RationalFunction& v : seed.cluster) {
            gs.push_back(g_vector_direct(v, qinit));
            names.push_back(print_canonical(v));
        }
        cluster_gs.push_back(std::move(gs));
        cluster_names.push_back(std::move(names));
    }

    {
        Timer t;
        CheckResult check{"sign_coherence"};
        for (std::size_t k = 0; k < cluster_gs.size(); ++k) {
            check.record(check_sign_coherence(cluster_gs[k]),
                         sc.name + " cluster #" + std::to_string(k));
        }
        check.seconds = t.seconds();
        report.checks.push_back(std::move(check));
    }
    {
        Timer t;
        CheckResult check{"g_vector_basis"};
        for (std::size_t k = 0; k < cluster_gs.size(); ++k) {
            check.record(check_g_basis(cluster_gs[k]),
                         sc.name + " cluster #" + std::to_string(k));
        }
        check.seconds = t.seconds();
        report.checks.push_back(std::move(check));
    }
    {
        // Injectivity of monomial -> sum of g-vectors over exponents <= 2:
        // equal g-vectors must come from the same variable multiset.
        Timer t;
        CheckResult check{"distinct_monomials"};
        std::map<GVector, std::string> seen;
        for (std::size_t k = 0; k < cluster_gs.size(); ++k) {
            std::vector<int> a(r, 0);
            while (true) {
                GVector g(r, 0);
                std::vector<std::string> parts;
                for (int i = 0; i < r; ++i) {
                    for (int c = 0; c < a[i]; ++c) parts.push_back(cluster_names[k][i]);
                    for (int c = 0; c < r; ++c) g[c] += a[i] * cluster_gs[k][i][c];
                }
                std::sort(parts.begin(), parts.end());
                std::string mono;
                for (const std::string& p : parts) mono += p + "*";
                auto [it, inserted] = seen.emplace(g, mono);
                check.record(inserted || it->second == mono,
                             sc.name + ": g-vector collision at " + gvec_string(g));
                int i = 0;
                for (; i < r; ++i) {
                    if (a[i] < 2) {
                        ++a[i];
                        break;
                    }
                    a[i] = 0;
                }
                if (i == r) break;
            }
        }
        check.seconds = t.seconds();
        report.checks.push_back(std::move(check));
    }

    // Pool of reachable cluster-variable reps over the base QP.
    std::vector<std::pair<GVector, DecoratedRep>> pool;
    for (const auto& seq : seqs) {
        for (int j = 1; j <= r; ++j) {
            DecoratedRep m = reachable_rep(sc.qp, seq, j);
            pool.emplace_back(g_vector_rep(m), std::move(m));
        }
    }

    {
        Timer t;
        CheckResult check{"e_rigidity"};
        for (const auto& [g, m] : pool) {
            check.record(e_invariant(m) == 0, sc.name + ": E != 0 at g=" + gvec_string(g));
        }
        // Equal g-vector implies isomorphic: compare each group member with
        // the group representative.
        std::map<GVector, const DecoratedRep*> reprs;
        for (const auto& [g, m] : pool) {
            auto [it, inserted] = reprs.emplace(g, &m);
            if (!inserted) {
                check.record(are_isomorphic(*it->second, m, iso_draws, iso_seed),
                             sc.name + ": equal g, non-isomorphic reps at g=" + gvec_string(g));
            }
        }
        check.seconds = t.seconds();
        report.checks.push_back(std::move(check));
    }

    {
        // h'_i = -[g_i]_+, h_i = min(0, g_i), g_i = h_i - h'_i along every
        // mutation edge out of a reachable rep.
        Timer t;
        CheckResult check{"h_vector_relation"};
        std::map<GVector, const DecoratedRep*> dedup;
        for (const auto& [g, m] : pool) dedup.emplace(g, &m);
        for (const auto& [g, mp] : dedup) {
            GVector h = h_vector_rep(*mp);
            for (int i = 1; i <= r; ++i) {
                if (!is_admissible(mp->qp, i)) continue;
                DecoratedRep mm = mutate_rep(*mp, i);
                GVector hp = h_vector_rep(mm);
                bool ok = hp[i - 1] == -std::max(0L, g[i - 1]) &&
                          h[i - 1] == std::min(0L, g[i - 1]) &&
                          g[i - 1] == h[i - 1] - hp[i - 1];
                check.record(ok, sc.name + ": edge relation failed at g=" + gvec_string(g) +
                                     " vertex " + std::to_string(i));
            }
        }
        check.seconds = t.seconds();
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace qpmut
