#pragma once

#include <string>
#include <vector>

#include "qpmut/errors.hpp"

namespace qpmut {

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;

    bool operator==(const Arrow& o) const = default;
};

// Finite quiver on vertices 1..n with vertices 1..r mutable and r+1..n frozen.
// No loops and no oriented 2-cycles; arrow ids unique.
class IceQuiver {
public:
    IceQuiver() = default;
    // allow_two_cycles is needed transiently for premutated quivers with
    // potential; plain ice quivers always forbid them.
    IceQuiver(int n, int r, std::vector<Arrow> arrows, bool allow_two_cycles = false);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool is_mutable(int v) const { return v >= 1 && v <= r_; }
    bool is_frozen(int v) const { return v > r_ && v <= n_; }

    std::vector<Arrow> arrows_from(int v) const;
    std::vector<Arrow> arrows_into(int v) const;
    const Arrow& arrow(const std::string& id) const;
    bool has_arrow(const std::string& id) const;

    bool operator==(const IceQuiver& o) const = default;

private:
    void validate(bool allow_two_cycles) const;

    int n_ = 0;
    int r_ = 0;
    std::vector<Arrow> arrows_;  // sorted by id
};

struct BMatrix {
    int n = 0;
    int r = 0;
    // entries[i][j] = b_{i+1, j+1}, shape n x r.
    std::vector<std::vector<long>> entries;

    bool operator==(const BMatrix& o) const = default;
};

// The five-step quiver mutation at mutable vertex i. Composite arrows are
// named "[b a]" from the ids of the composed pair (a then b), reversals "a*";
// 2-cycle cancellation removes the lexicographically smallest opposite pairs.
IceQuiver mutate_quiver(const IceQuiver& q, int i);

BMatrix b_matrix(const IceQuiver& q);

// Inverse of b_matrix for 2-cycle-free data; arrow ids generated as "a1"...
IceQuiver quiver_from_matrix(const BMatrix& b);

// Adds one frozen vertex r+l and one arrow (r+l) -> l per mutable vertex l.
// Input must have no frozen vertices.
IceQuiver principal_extension(const IceQuiver& q);

// Matrix mutation recurrence at column/row i, used as the independent oracle
// for mutate_quiver in tests and for the involution check.
BMatrix mutate_b_matrix(const BMatrix& b, int i);

}  // namespace qpmut
