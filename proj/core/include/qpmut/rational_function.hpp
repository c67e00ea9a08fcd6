#pragma once

#include "qpmut/laurent.hpp"

namespace qpmut {

// Quotient of Laurent polynomials, normalized so that num and den share no
// common Laurent-monomial factor, den carries no monomial content of its own
// beyond integer content 1, and den's lex-leading coefficient is positive.
// Cluster-variable arithmetic keeps den monomial, where this normal form is
// unique; general equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(0) {}
    explicit RationalFunction(const LaurentPoly& num);
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    static RationalFunction variable(int nvars, int index) {
        return RationalFunction(LaurentPoly::variable(nvars, index));
    }
    static RationalFunction constant(int nvars, const Rational& c) {
        return RationalFunction(LaurentPoly::constant(nvars, c));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    // True when den is a unit, i.e. the value lies in the Laurent ring.
    bool is_laurent() const { return den_.is_monomial(); }
    // The value as a Laurent polynomial; requires is_laurent().
    LaurentPoly as_laurent() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(long k) const;

    // Exact value equality (cross-multiplication).
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    // Structural equality of the normal forms, used for canonical sorting.
    bool same_form(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qpmut
