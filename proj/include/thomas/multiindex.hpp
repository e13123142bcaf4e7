#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace thomas {

// Exponent vector of a derivation operator; entry j counts applications of d/dz_j.
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : e(n, 0) {}
    explicit MultiIndex(std::vector<int> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }

    int order() const { return std::accumulate(e.begin(), e.end(), 0); }

    MultiIndex plus(std::size_t j) const {
        MultiIndex r = *this;
        r.e[j] += 1;
        return r;
    }

    bool divides(const MultiIndex& other) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    MultiIndex minus(const MultiIndex& other) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= other.e[i];
        return r;
    }

    bool is_zero() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const MultiIndex& o) const { return e == o.e; }
    bool operator!=(const MultiIndex& o) const { return e != o.e; }
    bool operator<(const MultiIndex& o) const { return e < o.e; } // container order only

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }
};

// Degree-reverse-lexicographic comparison of derivation multi-indices: lower order
// first; on equal order the index with the larger entry at the last position where
// they differ is the smaller one. perm[i] gives the position looked up for role i,
// realizing the n! degrevlex variants.
inline bool degrevlex_less(const MultiIndex& a, const MultiIndex& b,
                           const std::vector<int>& perm) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    for (std::size_t k = perm.size(); k-- > 0;) {
        int i = perm[k];
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

} // namespace thomas
