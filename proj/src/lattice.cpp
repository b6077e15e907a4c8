#include "partcat/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace partcat {

Poset Poset::of(std::vector<Partition> elements) {
    Poset p;
    p.elements = std::move(elements);
    const std::size_t n = p.elements.size();
    p.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = refinement_leq(p.elements[i], p.elements[j]);
    return p;
}

std::size_t Poset::index_of(const Partition& q) const {
    auto it = std::find(elements.begin(), elements.end(), q);
    if (it == elements.end()) throw std::out_of_range("partition not in poset: " + to_text(q));
    return static_cast<std::size_t>(it - elements.begin());
}

bool Poset::is_meet_closed() const {
    std::unordered_set<Partition, PartitionHash> s(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (!s.count(meet(elements[i], elements[j]))) return false;
    return true;
}

IntMatrix zeta_matrix(const Poset& poset) {
    const std::size_t n = poset.size();
    IntMatrix z(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) z[i][j] = poset.leq[i][j] ? 1 : 0;
    return z;
}

IntMatrix mobius(const Poset& poset) {
    const std::size_t n = poset.size();
    // Coarser elements have fewer blocks, so block count gives a linear extension.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return poset.elements[a].block_count() < poset.elements[b].block_count();
    });
    IntMatrix mu(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t xi = 0; xi < n; ++xi) {
        std::size_t x = order[xi];
        mu[x][x] = 1;
        for (std::size_t yi = xi + 1; yi < n; ++yi) {
            std::size_t y = order[yi];
            if (!poset.leq[x][y]) continue;
            std::int64_t s = 0;
            for (std::size_t zi = xi; zi < yi; ++zi) {
                std::size_t z = order[zi];
                if (poset.leq[x][z] && poset.leq[z][y]) s += mu[x][z];
            }
            mu[x][y] = -s;
        }
    }
    return mu;
}

GramMatrix gram(const Category& c, int k, Exec exec) {
    GramMatrix g;
    g.basis = c.enumerate(0, k);
    const std::size_t n = g.basis.size();
    g.exponents.assign(n, std::vector<int>(n, 0));
    std::vector<Partition> star(n);
    for (std::size_t i = 0; i < n; ++i) star[i] = involution(g.basis[i]);
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        for (std::size_t j = static_cast<std::size_t>(i); j < n; ++j) {
            int e = compose(star[i], g.basis[j]).loops;
            g.exponents[i][j] = e;
            g.exponents[j][i] = e;
        }
    return g;
}

LaurentPoly det_poly(const std::vector<std::vector<LaurentPoly>>& m) {
    bool monomial = true;
    ExponentMatrix e(m.size());
    for (std::size_t i = 0; i < m.size() && monomial; ++i)
        for (const auto& v : m[i]) {
            if (v.terms().size() != 1 || v.min_degree() < 0 || v.terms().begin()->second != 1) {
                monomial = false;
                break;
            }
            e[i].push_back(v.min_degree());
        }
    if (monomial) return det_monomial(e).to_laurent();
    return det_interpolate(m);
}

IntPoly gram_det(const Category& c, int k, Exec exec) { return det_monomial(gram(c, k, exec).exponents, exec); }

LaurentPoly omega(const Category& c, int k) {
    Poset ps = Poset::of(c.enumerate(0, k));
    if (!ps.is_meet_closed())
        throw std::domain_error("omega: C(0," + std::to_string(k) + ") of " + c.name() + " is not closed under meets");
    IntMatrix mu = mobius(ps);
    IntPoly prod({Integer(1)});
    for (std::size_t p = 0; p < ps.size(); ++p) {
        std::vector<Integer> f(ps.elements[p].block_count() + 1, Integer(0));
        for (std::size_t q = 0; q < ps.size(); ++q)
            if (ps.leq[q][p]) f[ps.elements[q].block_count()] += static_cast<long>(mu[q][p]);
        prod = prod * IntPoly(std::move(f));
    }
    return prod.to_laurent();
}

namespace {

struct FullLattice {
    Poset poset;
    IntMatrix mu;
    std::size_t finest;
};

const FullLattice& full_lattice(int l) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<FullLattice>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it != cache.end()) return *it->second;
    auto fl = std::make_unique<FullLattice>();
    fl->poset = Poset::of(all_partitions(0, l));
    fl->mu = mobius(fl->poset);
    fl->finest = fl->poset.index_of(all_singletons(0, l));
    auto& ref = *fl;
    cache.emplace(l, std::move(fl));
    return ref;
}

}  // namespace

LaurentPoly w_scalar(const std::vector<int>& e, int l) {
    const int k = static_cast<int>(e.size());
    if (k > l) throw std::invalid_argument("w_scalar: source larger than target");
    std::vector<char> hit(l, 0);
    for (int v : e) {
        if (v < 0 || v >= l || hit[v]) throw std::invalid_argument("w_scalar: not an injection");
        hit[v] = 1;
    }
    const FullLattice& fl = full_lattice(l);
    LaurentPoly w;
    for (std::size_t qi = 0; qi < fl.poset.size(); ++qi) {
        const Partition& q = fl.poset.elements[qi];
        // e_*(q) is the all-singleton partition iff the images lie in distinct blocks.
        std::vector<char> used(q.block_count(), 0);
        bool distinct = true;
        for (int v : e) {
            int b = q.lower_label(v);
            if (used[b]) {
                distinct = false;
                break;
            }
            used[b] = 1;
        }
        if (!distinct) continue;
        w.add_term(q.block_count() - k, Rational(static_cast<long>(fl.mu[qi][fl.finest])));
    }
    return w;
}

}  // namespace partcat
