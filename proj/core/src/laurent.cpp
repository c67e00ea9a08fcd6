#include "qpmut/laurent.hpp"

#include <algorithm>

#include "qpmut/errors.hpp"

namespace qpmut {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) {
        throw dimension_error("monomial exponent vector has wrong length");
    }
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
    if (index < 1 || index > nvars) {
        throw dimension_error("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    return monomial(nvars, e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const LaurentPoly::Exponents, Rational>& LaurentPoly::leading() const {
    if (terms_.empty()) throw domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw domain_error("min_exponents of zero polynomial");
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (int k = 0; k < nvars_; ++k) m[k] = std::min(m[k], e[k]);
    }
    return m;
}

LaurentPoly::Exponents LaurentPoly::max_exponents() const {
    if (terms_.empty()) throw domain_error("max_exponents of zero polynomial");
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (int k = 0; k < nvars_; ++k) m[k] = std::max(m[k], e[k]);
    }
    return m;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) {
        throw dimension_error("term exponent vector has wrong length");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_shape(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) {
        throw dimension_error("Laurent polynomials over different variable counts");
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_shape(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_shape(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_shape(o);
    LaurentPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Exponents& e, const Rational& c) const {
    if (static_cast<int>(e.size()) != nvars_) {
        throw dimension_error("monomial exponent vector has wrong length");
    }
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    Exponents f(nvars_);
    for (const auto& [et, ct] : terms_) {
        for (int k = 0; k < nvars_; ++k) f[k] = et[k] + e[k];
        r.terms_.emplace(f, ct * c);
    }
    return r;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_monomial()) {
        throw domain_error("inverse requires an invertible (monomial) Laurent polynomial");
    }
    const auto& [e, c] = *terms_.begin();
    Exponents f(nvars_);
    for (int k = 0; k < nvars_; ++k) f[k] = -e[k];
    return monomial(nvars_, f, Rational(1) / c);
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    LaurentPoly acc = constant(nvars_, Rational(1));
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    const int n = a.nvars();
    if (n != b.nvars()) throw dimension_error("division across variable counts");
    LaurentPoly q(n);
    if (a.is_zero()) return q;

    // Shift both operands so every exponent is non-negative; then b | a in the
    // Laurent ring iff the shifted quotient is an ordinary polynomial, and the
    // lex-leading-term division loop finds it term by term.
    LaurentPoly::Exponents sa = a.min_exponents(), sb = b.min_exponents();
    LaurentPoly::Exponents nsa(n), nsb(n);
    for (int k = 0; k < n; ++k) {
        nsa[k] = -sa[k];
        nsb[k] = -sb[k];
    }
    LaurentPoly ra = a.mul_monomial(nsa);
    const LaurentPoly rb = b.mul_monomial(nsb);
    const auto& [eb, cb] = rb.leading();

    const std::size_t step_cap = 1000000;
    std::size_t steps = 0;
    LaurentPoly::Exponents et(n);
    while (!ra.is_zero()) {
        const auto& [ea, ca] = ra.leading();
        for (int k = 0; k < n; ++k) {
            et[k] = ea[k] - eb[k];
            if (et[k] < 0) throw divisibility_error("non-exact Laurent division");
        }
        Rational ct = ca / cb;
        q.add_term(et, ct);
        ra = ra - rb.mul_monomial(et, ct);
        if (++steps > step_cap) {
            throw resource_error("Laurent division exceeded the term cap");
        }
    }
    // Undo the shifts: quotient of originals = q * x^(sa - sb).
    LaurentPoly::Exponents shift(n);
    for (int k = 0; k < n; ++k) shift[k] = sa[k] - sb[k];
    return q.mul_monomial(shift);
}

LaurentPoly specialize(const LaurentPoly& p, const std::map<int, LaurentPoly>& values) {
    const int n = p.nvars();
    for (const auto& [i, v] : values) {
        if (i < 1 || i > n) throw dimension_error("specialize: variable index out of range");
        if (v.nvars() != n) throw dimension_error("specialize: value variable count mismatch");
    }
    LaurentPoly r(n);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exponents rest(n, 0);
        LaurentPoly factor = LaurentPoly::constant(n, c);
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            auto it = values.find(k + 1);
            if (it == values.end()) {
                rest[k] = e[k];
                continue;
            }
            const LaurentPoly& v = it->second;
            if (e[k] < 0 && !v.is_monomial()) {
                throw domain_error("specialize: negative exponent on a non-invertible value");
            }
            factor = factor * v.pow(e[k]);
        }
        r = r + factor.mul_monomial(rest);
    }
    return r;
}

}  // namespace qpmut
