#include "qpmut/rational_function.hpp"

#include "qpmut/errors.hpp"

namespace qpmut {

namespace {

// Positive rational content c such that p / (sign * c) has coprime integer
// coefficients; sign is the sign of the lex-leading coefficient.
Rational signed_content(const LaurentPoly& p) {
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_class num = abs(c.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(g, l);
    content.canonicalize();
    if (p.leading().second < 0) content = -content;
    return content;
}

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.nvars(), Rational(1))) {
    normalize();
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    if (num_.nvars() != den_.nvars()) {
        throw dimension_error("rational function across variable counts");
    }
    const int n = num_.nvars();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(n, Rational(1));
        return;
    }
    LaurentPoly::Exponents mn = num_.min_exponents(), md = den_.min_exponents();
    LaurentPoly::Exponents shift(n);
    for (int k = 0; k < n; ++k) shift[k] = -std::min(mn[k], md[k]);
    num_ = num_.mul_monomial(shift);
    den_ = den_.mul_monomial(shift);
    Rational c = signed_content(den_);
    num_ = num_ * (Rational(1) / c);
    den_ = den_ * (Rational(1) / c);
}

LaurentPoly RationalFunction::as_laurent() const {
    if (num_.is_zero()) return num_;
    if (!den_.is_monomial()) {
        throw domain_error("rational function is not a Laurent polynomial");
    }
    return num_ * den_.inverse();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction acc = constant(nvars(), Rational(1));
    RationalFunction base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

}  // namespace qpmut
