#include "qpmut/path_algebra.hpp"

#include <algorithm>

namespace qpmut {

int path_src(const IceQuiver& q, const PathKey& p) {
    if (p.word.empty()) return p.base;
    return q.arrow(p.word.front()).src;
}

int path_tgt(const IceQuiver& q, const PathKey& p) {
    if (p.word.empty()) return p.base;
    return q.arrow(p.word.back()).tgt;
}

bool path_composable(const IceQuiver& q, const PathWord& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (q.arrow(w[k]).tgt != q.arrow(w[k + 1]).src) return false;
    }
    return true;
}

PathElement PathElement::trivial(const IceQuiver& q, int trunc, int vertex) {
    PathElement e(q, trunc);
    e.add_term({vertex, {}}, Rational(1));
    return e;
}

PathElement PathElement::arrow(const IceQuiver& q, int trunc, const std::string& id) {
    return path(q, trunc, {id});
}

PathElement PathElement::path(const IceQuiver& q, int trunc, const PathWord& w,
                              const Rational& c) {
    PathElement e(q, trunc);
    e.add_term({w.empty() ? 0 : q.arrow(w.front()).src, w}, c);
    return e;
}

void PathElement::add_term(const PathKey& k, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(k.word.size()) > trunc_) return;
    if (!path_composable(quiver_, k.word)) {
        throw input_error("non-composable path word");
    }
    PathKey key = k;
    if (!key.word.empty()) key.base = quiver_.arrow(key.word.front()).src;
    if (key.base < 1 || key.base > quiver_.n()) throw input_error("path base vertex out of range");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PathElement PathElement::operator+(const PathElement& o) const {
    PathElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

PathElement PathElement::operator-(const PathElement& o) const {
    PathElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

PathElement PathElement::operator*(const Rational& c) const {
    PathElement r(quiver_, trunc_);
    if (c == 0) return r;
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, t * c);
    return r;
}

PathElement PathElement::operator-() const {
    PathElement r(quiver_, trunc_);
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, -t);
    return r;
}

PathElement PathElement::operator*(const PathElement& o) const {
    PathElement r(quiver_, trunc_);
    for (const auto& [kb, cb] : o.terms_) {
        for (const auto& [ka, ca] : terms_) {
            if (path_tgt(quiver_, kb) != path_src(quiver_, ka)) continue;
            PathKey k;
            k.word = kb.word;
            k.word.insert(k.word.end(), ka.word.begin(), ka.word.end());
            k.base = path_src(quiver_, kb);
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

PathWord minimal_rotation(const PathWord& w) {
    PathWord best = w;
    PathWord rot = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

void Potential::add_cycle(const PathWord& w, const Rational& c) {
    if (c == 0) return;
    if (w.empty()) throw input_error("potential term must be a nonempty cycle");
    if (static_cast<int>(w.size()) > trunc_) return;
    if (!path_composable(quiver_, w) ||
        quiver_.arrow(w.back()).tgt != quiver_.arrow(w.front()).src) {
        throw input_error("potential term is not an oriented cycle");
    }
    PathWord key = minimal_rotation(w);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Potential Potential::operator+(const Potential& o) const {
    Potential r = *this;
    for (const auto& [w, c] : o.terms_) r.add_cycle(w, c);
    return r;
}

Potential Potential::operator-(const Potential& o) const {
    Potential r = *this;
    for (const auto& [w, c] : o.terms_) r.add_cycle(w, -c);
    return r;
}

Potential Potential::operator*(const Rational& c) const {
    Potential r(quiver_, trunc_);
    if (c == 0) return r;
    for (const auto& [w, t] : terms_) r.terms_.emplace(w, t * c);
    return r;
}

std::vector<std::pair<PathWord, Rational>> Potential::two_cycle_terms() const {
    std::vector<std::pair<PathWord, Rational>> r;
    for (const auto& [w, c] : terms_) {
        if (w.size() == 2) r.emplace_back(w, c);
    }
    return r;
}

PathElement cyclic_derivative(const Potential& w, const std::string& a) {
    if (!w.quiver().has_arrow(a)) throw input_error("cyclic derivative: unknown arrow " + a);
    PathElement r(w.quiver(), w.trunc());
    for (const auto& [cyc, c] : w.terms()) {
        const std::size_t L = cyc.size();
        for (std::size_t j = 0; j < L; ++j) {
            if (cyc[j] != a) continue;
            PathWord comp;
            for (std::size_t t = 1; t < L; ++t) comp.push_back(cyc[(j + t) % L]);
            r.add_term({comp.empty() ? w.quiver().arrow(a).tgt : 0, comp}, c);
        }
    }
    return r;
}

PathElement path_derivative(const Potential& w, const PathWord& p) {
    if (p.empty()) throw input_error("path derivative by a trivial path");
    PathElement r(w.quiver(), w.trunc());
    const std::size_t m = p.size();
    for (const auto& [cyc, c] : w.terms()) {
        const std::size_t L = cyc.size();
        if (m > L) continue;
        for (std::size_t j = 0; j < L; ++j) {
            bool match = true;
            for (std::size_t t = 0; t < m; ++t) {
                if (cyc[(j + t) % L] != p[t]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            PathWord comp;
            for (std::size_t t = m; t < L; ++t) comp.push_back(cyc[(j + t) % L]);
            int base = comp.empty() ? w.quiver().arrow(p.front()).src : 0;
            r.add_term({base, comp}, c);
        }
    }
    return r;
}

namespace {

PathElement substitute_word(const PathWord& w, int src,
                            const std::map<std::string, PathElement>& images,
                            const IceQuiver& target, int trunc) {
    PathElement acc = PathElement::trivial(target, trunc, src);
    for (const std::string& id : w) {
        auto it = images.find(id);
        if (it != images.end()) {
            acc = it->second * acc;
        } else {
            acc = PathElement::arrow(target, trunc, id) * acc;
        }
    }
    return acc;
}

}  // namespace

PathElement substitute(const PathElement& e, const std::map<std::string, PathElement>& images,
                       const IceQuiver& target) {
    PathElement r(target, e.trunc());
    for (const auto& [k, c] : e.terms()) {
        int src = path_src(e.quiver(), k);
        r = r + substitute_word(k.word, src, images, target, e.trunc()) * c;
    }
    return r;
}

Potential substitute(const Potential& w, const std::map<std::string, PathElement>& images,
                     const IceQuiver& target) {
    Potential r(target, w.trunc());
    for (const auto& [cyc, c] : w.terms()) {
        int src = w.quiver().arrow(cyc.front()).src;
        PathElement img = substitute_word(cyc, src, images, target, w.trunc());
        for (const auto& [k, ck] : img.terms()) {
            if (k.word.empty()) {
                throw internal_error("potential substitution produced a trivial path");
            }
            if (path_src(target, k) != path_tgt(target, k)) {
                throw internal_error("potential substitution produced a non-cycle");
            }
            r.add_cycle(k.word, ck * c);
        }
    }
    return r;
}

}  // namespace qpmut
