#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qpmut/rational.hpp"

namespace qpmut {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in a map ordered lexicographically on exponent vectors, with
// no zero coefficients stored, so equality is structural equality.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, const Exponents& e, const Rational& c = Rational(1));
    // 1-based variable index.
    static LaurentPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const { return coefficient(Exponents(nvars_, 0)); }
    // Lex-greatest term; poly must be nonzero.
    const std::pair<const Exponents, Rational>& leading() const;
    // Componentwise minimum of exponents over all terms; poly must be nonzero.
    Exponents min_exponents() const;
    Exponents max_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly mul_monomial(const Exponents& e, const Rational& c = Rational(1)) const;
    // Exponent k may be negative only for invertible (monomial) values.
    LaurentPoly pow(long k) const;
    // Multiplicative inverse; defined for monomials only.
    LaurentPoly inverse() const;

    // Adds c * x^e in place, erasing the term if the sum cancels.
    void add_term(const Exponents& e, const Rational& c);

private:
    void check_same_shape(const LaurentPoly& o) const;

    int nvars_;
    TermMap terms_;
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// Exact division in the Laurent polynomial ring; throws divisibility_error if
// b does not divide a.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Substitutes values[i] for variable i (1-based keys); unassigned variables
// are left alone. Values must be invertible (monomials) wherever they meet a
// negative exponent.
LaurentPoly specialize(const LaurentPoly& p, const std::map<int, LaurentPoly>& values);

}  // namespace qpmut
