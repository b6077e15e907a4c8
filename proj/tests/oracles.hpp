#pragma once

// Slow, independent reference implementations used only by the tests.
// They touch the library through labels and plain arithmetic types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "partcat/partition.hpp"
#include "partcat/scalar.hpp"

namespace oracle {

using partcat::LaurentPoly;
using partcat::Partition;

inline std::vector<int> labels(const Partition& p) {
    std::vector<int> v(p.points());
    for (int i = 0; i < p.points(); ++i) v[i] = p.label(i);
    return v;
}

inline std::uint64_t bell(int n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

inline std::uint64_t catalan(int n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[n];
}

inline std::uint64_t fibonacci_words(int k) {  // words in {1,2} summing to k
    if (k <= 1) return 1;
    return fibonacci_words(k - 1) + fibonacci_words(k - 2);
}

inline std::uint64_t integer_partitions(int n, int max_part = -1) {
    if (max_part < 0) max_part = n;
    if (n == 0) return 1;
    std::uint64_t s = 0;
    for (int m = std::min(n, max_part); m >= 1; --m) s += integer_partitions(n - m, m);
    return s;
}

inline std::uint64_t bipartitions_split(int k) {  // sum over k1 + 2 k2 = k of p(k1) p(k2)
    std::uint64_t s = 0;
    for (int k2 = 0; 2 * k2 <= k; ++k2) s += integer_partitions(k - 2 * k2) * integer_partitions(k2);
    return s;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Every set partition of n points by inserting point i into an old or new block.
inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int i, int blocks) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            cur.push_back(b);
            go(i + 1, std::max(blocks, b + 1));
            cur.pop_back();
        }
    };
    go(0, 0);
    return out;
}

// Labels in circular order: upper left to right, lower right to left.
inline std::vector<int> circular(const Partition& p) {
    const int k = p.upper(), l = p.lower();
    std::vector<int> c(k + l);
    for (int i = 0; i < k; ++i) c[i] = p.label(i);
    for (int j = 0; j < l; ++j) c[k + j] = p.label(k + l - 1 - j);
    return c;
}

inline bool crossing_free(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int x = b + 1; x < n; ++x)
                for (int d = x + 1; d < n; ++d)
                    if (c[a] == c[x] && c[b] == c[d] && c[a] != c[b]) return false;
    return true;
}

inline bool noncrossing(const Partition& p) { return crossing_free(circular(p)); }

struct Composite {
    Partition partition;
    int loops = 0;
};

// q after p, by breadth-first search over the stacked diagram.
inline Composite compose(const Partition& q, const Partition& p) {
    const int k = p.upper(), m = p.lower(), l = q.lower();
    // Nodes: 0..k-1 top, k..k+m-1 middle, k+m..k+m+l-1 bottom.
    const int n = k + m + l;
    std::vector<std::vector<int>> adj(n);
    auto link_same = [&](const std::vector<int>& nodes, const std::vector<int>& lab) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (lab[i] == lab[j]) {
                    adj[nodes[i]].push_back(nodes[j]);
                    adj[nodes[j]].push_back(nodes[i]);
                }
    };
    std::vector<int> pn(k + m), qn(m + l);
    std::iota(pn.begin(), pn.end(), 0);
    std::iota(qn.begin(), qn.end(), k);
    link_same(pn, labels(p));
    link_same(qn, labels(q));
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> bfs;
        bfs.push(s);
        comp[s] = nc;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = nc;
                    bfs.push(v);
                }
        }
        ++nc;
    }
    std::set<int> outer;
    std::vector<int> lab;
    for (int i = 0; i < k; ++i) lab.push_back(comp[i]);
    for (int i = 0; i < l; ++i) lab.push_back(comp[k + m + i]);
    outer.insert(lab.begin(), lab.end());
    std::set<int> middle;
    for (int i = 0; i < m; ++i) middle.insert(comp[k + i]);
    int loops = 0;
    for (int c : middle) loops += outer.count(c) ? 0 : 1;
    return {Partition::from_labels(k, l, lab), loops};
}

// Blocks of p inside each block of q (q coarser than p).
inline std::int64_t mobius_product(const Partition& q, const Partition& p) {
    std::map<int, std::set<int>> inside;
    for (int i = 0; i < p.points(); ++i) inside[q.label(i)].insert(p.label(i));
    std::int64_t mu = 1;
    for (const auto& [b, s] : inside) {
        int m = static_cast<int>(s.size());
        mu *= (m % 2 ? 1 : -1) * static_cast<std::int64_t>(factorial(m - 1));
    }
    return mu;
}

inline LaurentPoly leibniz_det(const std::vector<std::vector<LaurentPoly>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly det;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        LaurentPoly term(inv % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term = term * a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Fat point f lies in the gap after thin circular position 2f; two fat
// points share a block iff their gaps bound the same face.  Faces are
// traced gap -> next point -> its partner -> the gap after the partner.
inline Partition fatten_by_faces(const Partition& thin) {
    const int k = thin.upper() / 2, l = thin.lower() / 2, n = 2 * (k + l);
    std::vector<int> c = circular(thin);
    std::vector<int> partner(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && c[a] == c[b]) partner[a] = b;
    std::vector<int> face(n, -1);
    int nf = 0;
    for (int g = 0; g < n; ++g) {
        if (face[g] >= 0) continue;
        int x = g;
        while (face[x] < 0) {
            face[x] = nf;
            x = partner[(x + 1) % n];
        }
        ++nf;
    }
    std::vector<int> circ_fat(k + l);
    for (int f = 0; f < k + l; ++f) circ_fat[f] = face[2 * f];
    std::vector<int> lab(k + l);
    for (int i = 0; i < k; ++i) lab[i] = circ_fat[i];
    for (int j = 0; j < l; ++j) lab[k + j] = circ_fat[k + l - 1 - j];
    return Partition::from_labels(k, l, lab);
}

// Chebyshev recurrence for the Jones-Wenzl traces: D_0 = 1, D_1 = t.
inline LaurentPoly chebyshev(int k) {
    LaurentPoly a(1), b = LaurentPoly::t();
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
        LaurentPoly c = LaurentPoly::t() * b - a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace oracle
