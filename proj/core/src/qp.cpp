#include "qpmut/qp.hpp"

#include <algorithm>
#include <set>

namespace qpmut {

QP QP::make(const IceQuiver& quiver, int trunc) {
    QP qp;
    qp.quiver = quiver;
    qp.w = Potential(quiver, trunc);
    qp.truncation_degree = trunc;
    return qp;
}

bool is_admissible(const QP& qp, int l) {
    if (l < 1 || l > qp.quiver.r()) return false;
    for (const Arrow& a : qp.quiver.arrows_from(l)) {
        for (const Arrow& b : qp.quiver.arrows_into(l)) {
            if (a.tgt == b.src) return false;
        }
    }
    return true;
}

bool is_reduced(const QP& qp) {
    for (const Arrow& a : qp.quiver.arrows()) {
        for (const Arrow& b : qp.quiver.arrows()) {
            if (a.src == b.tgt && a.tgt == b.src) return false;
        }
    }
    return qp.w.two_cycle_terms().empty();
}

QP premutate_qp(const QP& qp, int l) {
    if (l < 1 || l > qp.quiver.r()) {
        throw mutation_domain_error("QP mutation at invalid vertex " + std::to_string(l));
    }
    if (!is_admissible(qp, l)) {
        throw admissibility_error("vertex " + std::to_string(l) +
                                  " lies on a 2-cycle; QP mutation undefined");
    }
    const IceQuiver& q = qp.quiver;
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) {
        if (a.src != l && a.tgt != l) arrows.push_back(a);
    }
    std::vector<Arrow> in = q.arrows_into(l), out = q.arrows_from(l);
    for (const Arrow& a : in) {
        for (const Arrow& b : out) {
            arrows.push_back({"[" + b.id + "∘" + a.id + "]", a.src, b.tgt});
        }
    }
    for (const Arrow& a : q.arrows()) {
        if (a.src == l || a.tgt == l) arrows.push_back({a.id + "*", a.tgt, a.src});
    }
    IceQuiver nq(q.n(), q.r(), std::move(arrows), /*allow_two_cycles=*/true);

    Potential wt(nq, qp.truncation_degree);
    // [W]: rewrite each cycle, rotated to avoid starting or ending at l, with
    // every passage a then b through l replaced by the composite arrow.
    for (const auto& [cyc, c] : qp.w.terms()) {
        PathWord w = cyc;
        std::size_t start = 0;
        while (start < w.size() && q.arrow(w[start]).src == l) ++start;
        if (start == w.size()) throw internal_error("potential cycle stuck at mutation vertex");
        std::rotate(w.begin(), w.begin() + start, w.end());
        PathWord out_word;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (q.arrow(w[k]).tgt == l) {
                out_word.push_back("[" + w[k + 1] + "∘" + w[k] + "]");
                ++k;
            } else {
                out_word.push_back(w[k]);
            }
        }
        wt.add_cycle(out_word, c);
    }
    for (const Arrow& a : in) {
        for (const Arrow& b : out) {
            wt.add_cycle({"[" + b.id + "∘" + a.id + "]", b.id + "*", a.id + "*"}, Rational(1));
        }
    }
    QP res;
    res.quiver = nq;
    res.w = wt;
    res.truncation_degree = qp.truncation_degree;
    return res;
}

namespace {

// Inverts the elementary substitution x -> x - u[x] by fixpoint iteration in
// the path-length filtration; fails if the correction terms do not gain
// degree (only possible when a 2-cycle's arrows occur in other quadratic
// terms), which is reported as a truncation problem.
std::map<std::string, PathElement> invert_elementary(
    const std::map<std::string, PathElement>& u, const IceQuiver& q, int trunc) {
    std::map<std::string, PathElement> iota;
    for (int round = 0; round <= trunc + 1; ++round) {
        std::map<std::string, PathElement> next;
        bool stable = true;
        for (const auto& [x, ux] : u) {
            PathElement img = PathElement::arrow(q, trunc, x) + substitute(ux, iota, q);
            auto it = iota.find(x);
            if (it == iota.end() || !(it->second == img)) stable = false;
            next.emplace(x, std::move(img));
        }
        iota = std::move(next);
        if (stable) break;
        if (round == trunc + 1) {
            throw truncation_error("substitution inversion did not converge; raise the truncation degree");
        }
    }
    // phi(iota(x)) must give back the arrow itself.
    std::map<std::string, PathElement> phi;
    for (const auto& [x, ux] : u) {
        phi.emplace(x, PathElement::arrow(q, trunc, x) - ux);
    }
    for (const auto& [x, ix] : iota) {
        if (!(substitute(ix, phi, q) == PathElement::arrow(q, trunc, x))) {
            throw truncation_error("substitution inversion check failed; raise the truncation degree");
        }
    }
    return iota;
}

int min_unwanted_degree(const Potential& w, const std::string& a, const std::string& b,
                        const PathWord& quad) {
    int best = -1;
    for (const auto& [cyc, c] : w.terms()) {
        if (cyc == quad) continue;
        if (std::find(cyc.begin(), cyc.end(), a) == cyc.end() &&
            std::find(cyc.begin(), cyc.end(), b) == cyc.end())
            continue;
        if (best < 0 || static_cast<int>(cyc.size()) < best) best = static_cast<int>(cyc.size());
    }
    return best;  // -1 when no unwanted terms remain
}

}  // namespace

ReduceResult reduce_qp(const QP& qp) {
    const IceQuiver input_quiver = qp.quiver;
    const int trunc = qp.truncation_degree;
    QP cur = qp;
    std::map<std::string, PathElement> psi;  // arrow -> image in the input algebra
    for (const Arrow& a : input_quiver.arrows()) {
        psi.emplace(a.id, PathElement::arrow(input_quiver, trunc, a.id));
    }
    ReduceResult res;
    res.deleted_quadratic = Potential(input_quiver, trunc);

    const int outer_cap = static_cast<int>(input_quiver.arrows().size()) + 2;
    for (int outer = 0; outer <= outer_cap; ++outer) {
        auto twos = cur.w.two_cycle_terms();
        if (twos.empty()) break;
        if (outer == outer_cap) throw truncation_error("reduction did not terminate");
        // Travel word (p, q): p applied first, so the term is c * (q p) with
        // "a" = p and "b" = q in the substitution rule.
        const PathWord quad = twos.front().first;
        const std::string a = quad[0], b = quad[1];

        int prev_deg = 0;
        for (int round = 0; round <= trunc + 1; ++round) {
            Rational c0 = Rational(0);
            if (auto it = cur.w.terms().find(quad); it != cur.w.terms().end()) c0 = it->second;
            if (c0 == 0) throw internal_error("2-cycle coefficient vanished during reduction");
            int deg = min_unwanted_degree(cur.w, a, b, quad);
            if (deg < 0) break;
            if (round > 0 && deg <= prev_deg) {
                throw truncation_error("reduction round failed to raise the unwanted degree");
            }
            if (round == trunc + 1) {
                throw truncation_error("reduction did not converge within the truncation degree");
            }
            prev_deg = deg;

            Potential rest = cur.w;
            rest.add_cycle(quad, -c0);
            Rational inv = Rational(1) / c0;
            std::map<std::string, PathElement> u;
            u.emplace(a, cyclic_derivative(rest, b) * inv);
            u.emplace(b, cyclic_derivative(rest, a) * inv);
            std::map<std::string, PathElement> phi;
            for (const auto& [x, ux] : u) {
                phi.emplace(x, PathElement::arrow(cur.quiver, trunc, x) - ux);
            }
            cur.w = substitute(cur.w, phi, cur.quiver);
            std::map<std::string, PathElement> iota = invert_elementary(u, cur.quiver, trunc);
            std::map<std::string, PathElement> next_psi;
            for (const auto& [x, px] : psi) {
                auto it = iota.find(x);
                if (it == iota.end()) {
                    next_psi.emplace(x, px);
                } else {
                    next_psi.emplace(x, substitute(it->second, psi, input_quiver));
                }
            }
            psi = std::move(next_psi);
        }

        // Only c * (q p) mentions a or b now: split it off and delete the pair.
        Rational c0 = cur.w.terms().at(quad);
        res.deleted_pairs.emplace_back(a, b);
        res.deleted_quadratic.add_cycle(quad, c0);
        Potential wr(Potential(cur.quiver, trunc));
        for (const auto& [cyc, c] : cur.w.terms()) {
            if (cyc != quad) wr.add_cycle(cyc, c);
        }
        std::vector<Arrow> kept;
        for (const Arrow& ar : cur.quiver.arrows()) {
            if (ar.id != a && ar.id != b) kept.push_back(ar);
        }
        IceQuiver nq(cur.quiver.n(), cur.quiver.r(), std::move(kept), /*allow_two_cycles=*/true);
        Potential wq(nq, trunc);
        for (const auto& [cyc, c] : wr.terms()) wq.add_cycle(cyc, c);
        cur.quiver = nq;
        cur.w = wq;
    }

    // Verification: psi applied to (reduced W + deleted quadratic part) must
    // reproduce the input potential mod truncation.
    Potential recon(input_quiver, trunc);
    for (const auto& [cyc, c] : cur.w.terms()) recon.add_cycle(cyc, c);
    recon = recon + res.deleted_quadratic;
    if (!(substitute(recon, psi, input_quiver) == qp.w)) {
        throw internal_error("reduction substitution failed to reproduce the input potential");
    }

    res.reduced = cur;
    for (const Arrow& ar : cur.quiver.arrows()) {
        res.subst.emplace(ar.id, psi.at(ar.id));
    }
    return res;
}

ReduceResult mutate_qp(const QP& qp, int l) { return reduce_qp(premutate_qp(qp, l)); }

QP mutate_qp_sequence(const QP& qp, const std::vector<int>& seq) {
    QP cur = qp;
    for (std::size_t m = 0; m < seq.size(); ++m) {
        if (!is_admissible(cur, seq[m])) {
            throw admissibility_error("sequence step " + std::to_string(m + 1) +
                                      ": vertex " + std::to_string(seq[m]) + " not admissible");
        }
        cur = mutate_qp(cur, seq[m]).reduced;
    }
    return cur;
}

}  // namespace qpmut
