#include "qpmut/decorated_rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qpmut {

DecoratedRep DecoratedRep::negative_simple(const QP& qp, int i) {
    DecoratedRep m;
    m.qp = qp;
    m.dims.assign(qp.quiver.n(), 0);
    m.vdims.assign(qp.quiver.n(), 0);
    m.vdims.at(i - 1) = 1;
    for (const Arrow& a : qp.quiver.arrows()) m.maps.emplace(a.id, QMatrix(0, 0));
    return m;
}

DecoratedRep DecoratedRep::simple(const QP& qp, int i) {
    DecoratedRep m;
    m.qp = qp;
    m.dims.assign(qp.quiver.n(), 0);
    m.vdims.assign(qp.quiver.n(), 0);
    m.dims.at(i - 1) = 1;
    for (const Arrow& a : qp.quiver.arrows()) {
        m.maps.emplace(a.id, QMatrix(m.dims[a.src - 1], m.dims[a.tgt - 1]));
    }
    return m;
}

void DecoratedRep::validate() const {
    const int n = qp.quiver.n();
    if (static_cast<int>(dims.size()) != n || static_cast<int>(vdims.size()) != n) {
        throw dimension_error("rep dimension vectors have wrong length");
    }
    for (int d : dims)
        if (d < 0) throw input_error("negative module dimension");
    for (int d : vdims)
        if (d < 0) throw input_error("negative decoration dimension");
    for (const Arrow& a : qp.quiver.arrows()) {
        auto it = maps.find(a.id);
        if (it == maps.end()) throw input_error("missing matrix for arrow " + a.id);
        if (it->second.rows() != static_cast<std::size_t>(dims[a.src - 1]) ||
            it->second.cols() != static_cast<std::size_t>(dims[a.tgt - 1])) {
            throw dimension_error("matrix shape mismatch for arrow " + a.id);
        }
    }
    if (maps.size() != qp.quiver.arrows().size()) {
        throw input_error("rep has matrices for unknown arrows");
    }
    if (!is_nilpotent(*this)) throw check_error("representation is not nilpotent");
    if (!check_jacobian_relation(qp, *this)) {
        throw check_error("representation violates the Jacobian relations");
    }
}

DecoratedRep direct_sum(const DecoratedRep& m, const DecoratedRep& n) {
    if (!(m.qp.quiver == n.qp.quiver) || !(m.qp.w == n.qp.w)) {
        throw input_error("direct sum of reps over different QPs");
    }
    DecoratedRep r;
    r.qp = m.qp;
    r.dims.resize(m.dims.size());
    r.vdims.resize(m.vdims.size());
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        r.dims[i] = m.dims[i] + n.dims[i];
        r.vdims[i] = m.vdims[i] + n.vdims[i];
    }
    for (const Arrow& a : r.qp.quiver.arrows()) {
        const QMatrix& ma = m.maps.at(a.id);
        const QMatrix& na = n.maps.at(a.id);
        QMatrix blk(r.dims[a.src - 1], r.dims[a.tgt - 1]);
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) blk.at(i, j) = ma.at(i, j);
        for (std::size_t i = 0; i < na.rows(); ++i)
            for (std::size_t j = 0; j < na.cols(); ++j)
                blk.at(ma.rows() + i, ma.cols() + j) = na.at(i, j);
        r.maps.emplace(a.id, std::move(blk));
    }
    return r;
}

QMatrix eval_element(const DecoratedRep& m, const PathElement& sigma, int src, int tgt) {
    const IceQuiver& q = m.qp.quiver;
    QMatrix acc(m.dims[src - 1], m.dims[tgt - 1]);
    for (const auto& [k, c] : sigma.terms()) {
        if (path_src(q, k) != src || path_tgt(q, k) != tgt) {
            throw dimension_error("path element mixes sources or targets");
        }
        QMatrix mp = QMatrix::identity(m.dims[src - 1]);
        for (const std::string& id : k.word) mp = mp * m.maps.at(id);
        acc = acc + mp * c;
    }
    return acc;
}

QMatrix eval_element(const DecoratedRep& m, const PathElement& sigma) {
    if (sigma.is_zero()) throw dimension_error("eval of zero element needs explicit vertices");
    const auto& k0 = sigma.terms().begin()->first;
    const IceQuiver& q = m.qp.quiver;
    return eval_element(m, sigma, path_src(q, k0), path_tgt(q, k0));
}

bool check_jacobian_relation(const QP& qp, const DecoratedRep& rep) {
    for (const Arrow& a : qp.quiver.arrows()) {
        PathElement d = cyclic_derivative(qp.w, a.id);
        if (!eval_element(rep, d, a.tgt, a.src).is_zero()) return false;
    }
    return true;
}

bool is_nilpotent(const DecoratedRep& rep) {
    const IceQuiver& q = rep.qp.quiver;
    const int n = q.n();
    // Radical filtration by per-vertex subspaces; nilpotent iff it hits zero.
    std::vector<QMatrix> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = QMatrix::identity(rep.dims[i]);
    int total = std::accumulate(rep.dims.begin(), rep.dims.end(), 0);
    for (int step = 0; step <= total; ++step) {
        bool all_zero = true;
        std::vector<QMatrix> next(n);
        for (int i = 0; i < n; ++i) next[i] = QMatrix(rep.dims[i], 0);
        for (const Arrow& a : q.arrows()) {
            QMatrix img = rep.maps.at(a.id) * cur[a.tgt - 1];
            next[a.src - 1] = hcat(next[a.src - 1], img);
        }
        for (int i = 0; i < n; ++i) {
            next[i] = image_basis(next[i]);
            if (next[i].cols() > 0) all_zero = false;
        }
        if (all_zero) return true;
        bool shrank = false;
        for (int i = 0; i < n; ++i) {
            if (next[i].cols() < cur[i].cols()) shrank = true;
        }
        if (!shrank) return false;
        cur = std::move(next);
    }
    return false;
}

namespace {

ABGMaps abg_maps_unchecked(const DecoratedRep& m, int l) {
    const IceQuiver& q = m.qp.quiver;
    ABGMaps r;
    r.out_arrows = q.arrows_from(l);
    r.in_arrows = q.arrows_into(l);
    const int dl = m.dims[l - 1];

    r.alpha = QMatrix(dl, 0);
    for (const Arrow& a : r.out_arrows) r.alpha = hcat(r.alpha, m.maps.at(a.id));

    r.beta = QMatrix(0, dl);
    for (const Arrow& b : r.in_arrows) r.beta = vcat(r.beta, m.maps.at(b.id));

    std::size_t din = r.alpha.cols(), dout = r.beta.rows();
    r.gamma = QMatrix(din, dout);
    std::size_t row0 = 0;
    for (const Arrow& a : r.out_arrows) {
        std::size_t col0 = 0;
        for (const Arrow& b : r.in_arrows) {
            PathElement d = path_derivative(m.qp.w, {b.id, a.id});
            QMatrix block = eval_element(m, d, a.tgt, b.src);
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    r.gamma.at(row0 + i, col0 + j) = block.at(i, j);
            col0 += m.dims[b.src - 1];
        }
        row0 += m.dims[a.tgt - 1];
    }
    return r;
}

}  // namespace

ABGMaps abg_maps(const DecoratedRep& m, int l) {
    if (!is_admissible(m.qp, l)) {
        throw admissibility_error("vertex " + std::to_string(l) + " lies on a 2-cycle");
    }
    return abg_maps_unchecked(m, l);
}

DecoratedRep mutate_rep(const DecoratedRep& m, int l) {
    ABGMaps ab = abg_maps(m, l);
    const std::size_t din = ab.alpha.cols(), dout = ab.beta.rows();

    QMatrix kgamma = kernel_basis(ab.gamma);             // dout x kg
    const std::size_t kg = kgamma.cols();
    auto beta_in_k = solve(kgamma, ab.beta);             // Im beta inside Ker gamma
    if (!beta_in_k) throw internal_error("Im beta not contained in Ker gamma");
    QMatrix u1 = image_basis(*beta_in_k);                // kg x s1
    const std::size_t k1 = kg - u1.cols();
    QMatrix pi(k1, kg);
    if (kg > 0) {
        QMatrix t1 = extend_to_square(u1);
        pi = inverse(t1).rows_slice(u1.cols(), kg);
    }
    QMatrix rho(kg, dout);
    if (dout > 0 && kg > 0) {
        QMatrix t2 = extend_to_square(kgamma);
        rho = inverse(t2).rows_slice(0, kg);
    }

    QMatrix g = image_basis(ab.gamma);                   // din x k2
    const std::size_t k2 = g.cols();
    auto gc = solve(g, ab.gamma);                        // k2 x dout
    if (!gc) throw internal_error("gamma does not factor through its image basis");

    QMatrix kalpha = kernel_basis(ab.alpha);             // din x ka
    const std::size_t ka = kalpha.cols();
    auto g_in_ka = solve(kalpha, g);                     // Im gamma inside Ker alpha
    if (!g_in_ka) throw internal_error("Im gamma not contained in Ker alpha");
    QMatrix u3 = image_basis(*g_in_ka);                  // ka x k2
    if (u3.cols() != k2) throw internal_error("Im gamma dropped rank inside Ker alpha");
    const std::size_t k3 = ka - k2;
    QMatrix sigma(din, k3);
    if (ka > 0) {
        QMatrix t3 = extend_to_square(u3);
        sigma = kalpha * t3.columns(k2, ka);
    }

    const std::size_t k4 = m.vdims[l - 1];
    const std::size_t dl_new = k1 + k2 + k3 + k4;

    // alpha-bar : M_out -> M-bar_l with row blocks (-pi rho, -gamma coords, 0, 0)
    QMatrix alpha_bar(dl_new, dout);
    {
        QMatrix b1 = -(pi * rho);
        QMatrix b2 = -*gc;
        for (std::size_t j = 0; j < dout; ++j) {
            for (std::size_t i = 0; i < k1; ++i) alpha_bar.at(i, j) = b1.at(i, j);
            for (std::size_t i = 0; i < k2; ++i) alpha_bar.at(k1 + i, j) = b2.at(i, j);
        }
    }
    // beta-bar : M-bar_l -> M_in with column blocks (0, incl, incl sigma, 0)
    QMatrix beta_bar(din, dl_new);
    for (std::size_t i = 0; i < din; ++i) {
        for (std::size_t j = 0; j < k2; ++j) beta_bar.at(i, k1 + j) = g.at(i, j);
        for (std::size_t j = 0; j < k3; ++j) beta_bar.at(i, k1 + k2 + j) = sigma.at(i, j);
    }

    QMatrix kbeta = kernel_basis(ab.beta);               // dl x kb
    QMatrix ia = image_basis(ab.alpha);                  // dl x ra
    std::size_t inter = kbeta.cols() + ia.cols() - rank(hcat(kbeta, ia));
    const std::size_t vl_new = kbeta.cols() - inter;

    QP pq = premutate_qp(m.qp, l);
    DecoratedRep pre;
    pre.qp = pq;
    pre.dims = m.dims;
    pre.dims[l - 1] = static_cast<int>(dl_new);
    pre.vdims = m.vdims;
    pre.vdims[l - 1] = static_cast<int>(vl_new);

    // Arrows not incident with l survive with their names and matrices; the
    // composite and starred arrows are new names, filled in below.
    for (const Arrow& a : pq.quiver.arrows()) {
        auto it = m.maps.find(a.id);
        if (it != m.maps.end()) pre.maps.emplace(a.id, it->second);
    }
    // Composite arrows [b∘a]: action M_a M_b.
    for (const Arrow& a : ab.in_arrows) {
        for (const Arrow& b : ab.out_arrows) {
            pre.maps.emplace("[" + b.id + "∘" + a.id + "]",
                             m.maps.at(a.id) * m.maps.at(b.id));
        }
    }
    // Reversals of old in-arrows b: j -> l become arrows out of l, with action
    // the corresponding column block of alpha-bar; reversals of old
    // out-arrows a: l -> i become arrows into l, with the row block of
    // beta-bar.
    {
        std::size_t col0 = 0;
        for (const Arrow& b : ab.in_arrows) {
            std::size_t w = m.dims[b.src - 1];
            pre.maps.emplace(b.id + "*", alpha_bar.columns(col0, col0 + w));
            col0 += w;
        }
        std::size_t row0 = 0;
        for (const Arrow& a : ab.out_arrows) {
            std::size_t w = m.dims[a.tgt - 1];
            pre.maps.emplace(a.id + "*", beta_bar.rows_slice(row0, row0 + w));
            row0 += w;
        }
    }
    pre.validate();

    ReduceResult rr = reduce_qp(pq);
    DecoratedRep out;
    out.qp = rr.reduced;
    out.dims = pre.dims;
    out.vdims = pre.vdims;
    for (const Arrow& a : rr.reduced.quiver.arrows()) {
        out.maps.emplace(a.id, eval_element(pre, rr.subst.at(a.id), a.src, a.tgt));
    }
    out.validate();
    return out;
}

std::vector<std::vector<QMatrix>> hom_basis(const DecoratedRep& m, const DecoratedRep& n) {
    const IceQuiver& q = m.qp.quiver;
    if (!(q == n.qp.quiver)) throw input_error("hom between reps over different quivers");
    const int nv = q.n();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (int i = 0; i < nv; ++i) {
        offset[i + 1] = offset[i] + static_cast<std::size_t>(n.dims[i]) * m.dims[i];
    }
    const std::size_t unknowns = offset[nv];
    std::size_t rows = 0;
    for (const Arrow& a : q.arrows()) {
        rows += static_cast<std::size_t>(n.dims[a.src - 1]) * m.dims[a.tgt - 1];
    }
    QMatrix sys(rows, unknowns);
    std::size_t row0 = 0;
    // Constraint per arrow a: phi_{s(a)} M_a = N_a phi_{t(a)}, unknowns
    // phi_i laid out row-major inside each vertex block.
    auto idx = [&](int vtx, std::size_t r, std::size_t c) {
        return offset[vtx] + r * m.dims[vtx] + c;
    };
    for (const Arrow& a : q.arrows()) {
        const int s = a.src - 1, t = a.tgt - 1;
        const QMatrix& Ma = m.maps.at(a.id);
        const QMatrix& Na = n.maps.at(a.id);
        for (int i = 0; i < n.dims[s]; ++i) {
            for (int j = 0; j < m.dims[t]; ++j) {
                std::size_t row = row0 + static_cast<std::size_t>(i) * m.dims[t] + j;
                for (int k = 0; k < m.dims[s]; ++k) {
                    sys.at(row, idx(s, i, k)) += Ma.at(k, j);
                }
                for (int k = 0; k < n.dims[t]; ++k) {
                    sys.at(row, idx(t, k, j)) -= Na.at(i, k);
                }
            }
        }
        row0 += static_cast<std::size_t>(n.dims[s]) * m.dims[t];
    }
    QMatrix ker = kernel_basis(sys);
    std::vector<std::vector<QMatrix>> basis;
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        std::vector<QMatrix> phis;
        for (int v = 0; v < nv; ++v) {
            QMatrix phi(n.dims[v], m.dims[v]);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j) phi.at(i, j) = ker.at(idx(v, i, j), b);
            phis.push_back(std::move(phi));
        }
        basis.push_back(std::move(phis));
    }
    return basis;
}

long hom_dim(const DecoratedRep& m, const DecoratedRep& n) {
    return static_cast<long>(hom_basis(m, n).size());
}

GVector g_vector_rep(const DecoratedRep& m) {
    const int nv = m.qp.quiver.n();
    GVector g(nv);
    for (int i = 1; i <= nv; ++i) {
        ABGMaps ab = abg_maps_unchecked(m, i);
        g[i - 1] = static_cast<long>(kernel_basis(ab.gamma).cols()) - m.dims[i - 1] +
                   m.vdims[i - 1];
    }
    return g;
}

GVector h_vector_rep(const DecoratedRep& m) {
    const int nv = m.qp.quiver.n();
    GVector h(nv);
    for (int i = 1; i <= nv; ++i) {
        ABGMaps ab = abg_maps_unchecked(m, i);
        h[i - 1] = -static_cast<long>(kernel_basis(ab.beta).cols());
    }
    return h;
}

long e_invariant(const DecoratedRep& m) {
    GVector g = g_vector_rep(m);
    long e = hom_dim(m, m);
    for (std::size_t i = 0; i < g.size(); ++i) e += g[i] * m.dims[i];
    return e;
}

long e_inj(const DecoratedRep& m, const DecoratedRep& n) {
    GVector g = g_vector_rep(n);
    long e = hom_dim(m, n);
    for (std::size_t i = 0; i < g.size(); ++i) e += static_cast<long>(m.dims[i]) * g[i];
    return e;
}

long e_sym(const DecoratedRep& m, const DecoratedRep& n) {
    return e_inj(m, n) + e_inj(n, m);
}

bool are_isomorphic(const DecoratedRep& m, const DecoratedRep& n, int draws,
                    unsigned long seed) {
    if (!(m.qp.quiver == n.qp.quiver) || !(m.qp.w == n.qp.w)) return false;
    if (m.dims != n.dims || m.vdims != n.vdims) return false;
    auto basis = hom_basis(m, n);
    if (basis.empty()) {
        return std::all_of(m.dims.begin(), m.dims.end(), [](int d) { return d == 0; });
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-20, 20);
    const int nv = m.qp.quiver.n();
    for (int t = 0; t < draws; ++t) {
        std::vector<QMatrix> phi(nv);
        for (int v = 0; v < nv; ++v) phi[v] = QMatrix(n.dims[v], m.dims[v]);
        for (const auto& b : basis) {
            Rational c(dist(rng));
            for (int v = 0; v < nv; ++v) phi[v] = phi[v] + b[v] * c;
        }
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) ok = is_invertible(phi[v]);
        if (ok) return true;
    }
    return false;
}

DecoratedRep relabel_onto(const DecoratedRep& m, const QP& target) {
    const IceQuiver& qs = m.qp.quiver;
    const IceQuiver& qt = target.quiver;
    if (qs.n() != qt.n() || qs.arrows().size() != qt.arrows().size()) {
        throw input_error("relabel_onto: quivers of different shapes");
    }
    std::map<std::string, std::string> rename;  // source id -> target id
    for (const Arrow& a : qs.arrows()) {
        const Arrow* found = nullptr;
        for (const Arrow& b : qt.arrows()) {
            if (b.src == a.src && b.tgt == a.tgt) {
                if (found) throw input_error("relabel_onto: parallel arrows are ambiguous");
                found = &b;
            }
        }
        if (!found) throw input_error("relabel_onto: no matching arrow for " + a.id);
        rename.emplace(a.id, found->id);
    }
    Potential wr(qt, target.truncation_degree);
    for (const auto& [cyc, c] : m.qp.w.terms()) {
        PathWord w;
        for (const std::string& id : cyc) w.push_back(rename.at(id));
        wr.add_cycle(w, c);
    }
    if (!(wr == target.w)) {
        throw check_error("relabel_onto: potentials differ after renaming");
    }
    DecoratedRep out;
    out.qp = target;
    out.dims = m.dims;
    out.vdims = m.vdims;
    for (const auto& [id, mat] : m.maps) out.maps.emplace(rename.at(id), mat);
    return out;
}

}  // namespace qpmut
