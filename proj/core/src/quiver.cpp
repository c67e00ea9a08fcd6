#include "qpmut/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qpmut {

IceQuiver::IceQuiver(int n, int r, std::vector<Arrow> arrows, bool allow_two_cycles)
    : n_(n), r_(r), arrows_(std::move(arrows)) {
    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    validate(allow_two_cycles);
}

void IceQuiver::validate(bool allow_two_cycles) const {
    if (n_ < 0 || r_ < 0 || r_ > n_) throw input_error("invalid vertex counts");
    std::set<std::string> ids;
    std::map<std::pair<int, int>, int> count;
    for (const Arrow& a : arrows_) {
        if (a.src < 1 || a.src > n_ || a.tgt < 1 || a.tgt > n_) {
            throw input_error("arrow endpoint out of range: " + a.id);
        }
        if (a.src == a.tgt) throw input_error("loop arrow forbidden: " + a.id);
        if (!ids.insert(a.id).second) throw input_error("duplicate arrow id: " + a.id);
        ++count[{a.src, a.tgt}];
    }
    for (const auto& [st, c] : count) {
        if (!allow_two_cycles && count.count({st.second, st.first})) {
            throw input_error("oriented 2-cycle between vertices " +
                              std::to_string(st.first) + " and " + std::to_string(st.second));
        }
    }
}

std::vector<Arrow> IceQuiver::arrows_from(int v) const {
    std::vector<Arrow> r;
    for (const Arrow& a : arrows_)
        if (a.src == v) r.push_back(a);
    return r;
}

std::vector<Arrow> IceQuiver::arrows_into(int v) const {
    std::vector<Arrow> r;
    for (const Arrow& a : arrows_)
        if (a.tgt == v) r.push_back(a);
    return r;
}

const Arrow& IceQuiver::arrow(const std::string& id) const {
    for (const Arrow& a : arrows_)
        if (a.id == id) return a;
    throw input_error("unknown arrow id: " + id);
}

bool IceQuiver::has_arrow(const std::string& id) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [&](const Arrow& a) { return a.id == id; });
}

IceQuiver mutate_quiver(const IceQuiver& q, int i) {
    if (!q.is_mutable(i)) {
        throw mutation_domain_error("mutation at non-mutable vertex " + std::to_string(i));
    }
    std::vector<Arrow> next;
    for (const Arrow& a : q.arrows()) {
        if (a.src != i && a.tgt != i) next.push_back(a);
    }
    for (const Arrow& a : q.arrows_into(i)) {
        for (const Arrow& b : q.arrows_from(i)) {
            next.push_back({"[" + b.id + "∘" + a.id + "]", a.src, b.tgt});
        }
    }
    for (const Arrow& a : q.arrows()) {
        if (a.src == i || a.tgt == i) next.push_back({a.id + "*", a.tgt, a.src});
    }

    // Cancel a maximal set of disjoint 2-cycles, pairing the lexicographically
    // smallest ids in each direction.
    std::map<std::pair<int, int>, std::vector<std::string>> by_pair;
    for (const Arrow& a : next) by_pair[{a.src, a.tgt}].push_back(a.id);
    for (auto& [st, ids] : by_pair) std::sort(ids.begin(), ids.end());
    std::set<std::string> removed;
    for (auto& [st, ids] : by_pair) {
        if (st.first > st.second) continue;
        auto rev = by_pair.find({st.second, st.first});
        if (rev == by_pair.end()) continue;
        std::size_t k = std::min(ids.size(), rev->second.size());
        for (std::size_t t = 0; t < k; ++t) {
            removed.insert(ids[t]);
            removed.insert(rev->second[t]);
        }
    }
    std::vector<Arrow> kept;
    for (const Arrow& a : next) {
        if (!removed.count(a.id)) kept.push_back(a);
    }
    return IceQuiver(q.n(), q.r(), std::move(kept));
}

BMatrix b_matrix(const IceQuiver& q) {
    BMatrix b;
    b.n = q.n();
    b.r = q.r();
    b.entries.assign(b.n, std::vector<long>(b.r, 0));
    for (const Arrow& a : q.arrows()) {
        if (a.tgt <= b.r) b.entries[a.src - 1][a.tgt - 1] += 1;
        if (a.src <= b.r) b.entries[a.tgt - 1][a.src - 1] -= 1;
    }
    return b;
}

IceQuiver quiver_from_matrix(const BMatrix& b) {
    for (int i = 0; i < b.r; ++i) {
        for (int j = 0; j < b.r; ++j) {
            if (b.entries[i][j] != -b.entries[j][i]) {
                throw input_error("B-matrix top block is not skew-symmetric");
            }
        }
    }
    std::vector<Arrow> arrows;
    int next_id = 1;
    auto add = [&](int src, int tgt, long count) {
        for (long k = 0; k < count; ++k) {
            arrows.push_back({"a" + std::to_string(next_id++), src, tgt});
        }
    };
    for (int i = 0; i < b.r; ++i)
        for (int j = i + 1; j < b.r; ++j) {
            long m = b.entries[i][j];
            if (m > 0) add(i + 1, j + 1, m);
            if (m < 0) add(j + 1, i + 1, -m);
        }
    for (int i = b.r; i < b.n; ++i)
        for (int j = 0; j < b.r; ++j) {
            long m = b.entries[i][j];
            if (m > 0) add(i + 1, j + 1, m);
            if (m < 0) add(j + 1, i + 1, -m);
        }
    return IceQuiver(b.n, b.r, std::move(arrows));
}

IceQuiver principal_extension(const IceQuiver& q) {
    if (q.r() != q.n()) {
        throw input_error("principal_extension requires a fully mutable quiver");
    }
    int r = q.r();
    std::vector<Arrow> arrows = q.arrows();
    for (int l = 1; l <= r; ++l) {
        arrows.push_back({"f" + std::to_string(l), r + l, l});
    }
    return IceQuiver(2 * r, r, std::move(arrows));
}

BMatrix mutate_b_matrix(const BMatrix& b, int i) {
    if (i < 1 || i > b.r) throw mutation_domain_error("matrix mutation at invalid index");
    const int k = i - 1;
    BMatrix m = b;
    for (int p = 0; p < b.n; ++p) {
        for (int q = 0; q < b.r; ++q) {
            if (p == k || q == k) {
                m.entries[p][q] = -b.entries[p][q];
            } else {
                long bpk = b.entries[p][k], bkq = b.entries[k][q];
                m.entries[p][q] = b.entries[p][q] + (std::abs(bpk) * bkq + bpk * std::abs(bkq)) / 2;
            }
        }
    }
    return m;
}

}  // namespace qpmut
