#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpmut/quiver.hpp"
#include "qpmut/rational.hpp"

namespace qpmut {

// A path is a sequence of arrow ids in travel order: paths[0] is applied
// first. Algebraically the word reads right to left, so the travel sequence
// (a, b) is the element "ba".
using PathWord = std::vector<std::string>;

// Key for a basis path: trivial paths (empty word) carry their vertex in
// `base`; nonempty words store their source vertex there, kept redundant so
// ordering is total and canonical.
struct PathKey {
    int base = 0;
    PathWord word;

    auto operator<=>(const PathKey& o) const = default;
};

int path_src(const IceQuiver& q, const PathKey& p);
int path_tgt(const IceQuiver& q, const PathKey& p);
bool path_composable(const IceQuiver& q, const PathWord& w);

// Element of the truncated completed path algebra: finite rational combination
// of paths of length <= trunc.
class PathElement {
public:
    PathElement() = default;
    PathElement(IceQuiver quiver, int trunc) : quiver_(std::move(quiver)), trunc_(trunc) {}

    static PathElement zero(const IceQuiver& q, int trunc) { return PathElement(q, trunc); }
    static PathElement trivial(const IceQuiver& q, int trunc, int vertex);
    static PathElement arrow(const IceQuiver& q, int trunc, const std::string& id);
    static PathElement path(const IceQuiver& q, int trunc, const PathWord& w,
                            const Rational& c = Rational(1));

    const IceQuiver& quiver() const { return quiver_; }
    int trunc() const { return trunc_; }
    const std::map<PathKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * w, validating composability and dropping words longer than the
    // truncation degree.
    void add_term(const PathKey& k, const Rational& c);

    PathElement operator+(const PathElement& o) const;
    PathElement operator-(const PathElement& o) const;
    PathElement operator*(const Rational& c) const;
    // Concatenation product: (this * o) travels o first, then this.
    PathElement operator*(const PathElement& o) const;
    PathElement operator-() const;
    bool operator==(const PathElement& o) const { return terms_ == o.terms_; }

private:
    IceQuiver quiver_;
    int trunc_ = 0;
    std::map<PathKey, Rational> terms_;
};

// Potential: rational combination of oriented cycles, each stored as the
// lexicographically minimal rotation of its travel word.
class Potential {
public:
    Potential() = default;
    Potential(IceQuiver quiver, int trunc) : quiver_(std::move(quiver)), trunc_(trunc) {}

    const IceQuiver& quiver() const { return quiver_; }
    int trunc() const { return trunc_; }
    const std::map<PathWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c times the cycle with travel word w (any rotation), canonicalizing.
    void add_cycle(const PathWord& w, const Rational& c);

    Potential operator+(const Potential& o) const;
    Potential operator-(const Potential& o) const;
    Potential operator*(const Rational& c) const;
    bool operator==(const Potential& o) const { return terms_ == o.terms_; }

    // Terms that are cycles of length exactly 2.
    std::vector<std::pair<PathWord, Rational>> two_cycle_terms() const;

private:
    IceQuiver quiver_;
    int trunc_ = 0;
    std::map<PathWord, Rational> terms_;
};

PathWord minimal_rotation(const PathWord& w);

// Cyclic derivative d_a W: sum over occurrences of arrow a of the rotated
// complementary path.
PathElement cyclic_derivative(const Potential& w, const std::string& a);

// Path derivative d_p W including wrap-around decompositions.
PathElement path_derivative(const Potential& w, const PathWord& p);

// Applies an arrow substitution (unmentioned arrows map to themselves) to a
// path element / potential over the target quiver, truncating.
PathElement substitute(const PathElement& e, const std::map<std::string, PathElement>& images,
                       const IceQuiver& target);
Potential substitute(const Potential& w, const std::map<std::string, PathElement>& images,
                     const IceQuiver& target);

}  // namespace qpmut
