#pragma once

#include <algorithm>
#include <vector>

#include "qpmut/errors.hpp"

namespace qpmut {

// Element of the tropical semifield Trop(u_1..u_m): a monomial in the
// generators, represented by its exponent vector. Addition takes the
// componentwise minimum of exponents, multiplication adds them.
struct TropicalElement {
    std::vector<long> exponents;

    TropicalElement() = default;
    explicit TropicalElement(std::vector<long> e) : exponents(std::move(e)) {}
    static TropicalElement one(int m) { return TropicalElement(std::vector<long>(m, 0)); }
    static TropicalElement generator(int m, int index) {
        TropicalElement t = one(m);
        t.exponents.at(index) = 1;
        return t;
    }

    int size() const { return static_cast<int>(exponents.size()); }
    bool operator==(const TropicalElement& o) const = default;

    TropicalElement inverse() const {
        TropicalElement r = *this;
        for (long& e : r.exponents) e = -e;
        return r;
    }
    TropicalElement pow(long k) const {
        TropicalElement r = *this;
        for (long& e : r.exponents) e *= k;
        return r;
    }
};

inline void check_same_length(const TropicalElement& a, const TropicalElement& b) {
    if (a.size() != b.size()) throw dimension_error("tropical elements of different lengths");
}

inline TropicalElement tropical_add(const TropicalElement& a, const TropicalElement& b) {
    check_same_length(a, b);
    TropicalElement r = a;
    for (int k = 0; k < a.size(); ++k) r.exponents[k] = std::min(a.exponents[k], b.exponents[k]);
    return r;
}

inline TropicalElement tropical_mul(const TropicalElement& a, const TropicalElement& b) {
    check_same_length(a, b);
    TropicalElement r = a;
    for (int k = 0; k < a.size(); ++k) r.exponents[k] = a.exponents[k] + b.exponents[k];
    return r;
}

}  // namespace qpmut
