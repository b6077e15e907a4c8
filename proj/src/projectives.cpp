#include "partcat/projectives.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace partcat {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

using Index = std::unordered_map<Partition, std::size_t, PartitionHash>;

Index index_of(const std::vector<Partition>& v) {
    Index m;
    for (std::size_t i = 0; i < v.size(); ++i) m.emplace(v[i], i);
    return m;
}

// Components of uf as sorted member lists, ordered by least member.
std::vector<std::vector<Partition>> components(UnionFind& uf, const std::vector<Partition>& v) {
    std::map<std::size_t, std::vector<Partition>> g;
    for (std::size_t i = 0; i < v.size(); ++i) g[uf.find(i)].push_back(v[i]);
    std::vector<std::vector<Partition>> out;
    for (auto& [root, members] : g) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

bool is_projective(const Partition& p) {
    if (p.upper() != p.lower()) throw std::invalid_argument("is_projective: partition is not square");
    return involution(p) == p && compose(p, p).partition == p;
}

Partition through_factor(const Partition& p) { return make_projective(p).half; }

ProjectivePartition make_projective(const Partition& p) {
    if (p.upper() != p.lower() || !is_projective(p)) throw std::invalid_argument("not a projective partition: " + to_text(p));
    const int k = p.upper();
    std::vector<char> through(p.block_count(), 0);
    for (int j = 0; j < k; ++j) through[p.lower_label(j)] = 1;
    std::vector<int> lower_of(p.block_count(), -1);
    std::vector<int> labels(k);
    int T = 0;
    for (int i = 0; i < k; ++i) {
        int b = p.upper_label(i);
        labels[i] = b;
        if (through[b] && lower_of[b] < 0) lower_of[b] = T++;
    }
    std::vector<int> low(T);
    for (int b = 0; b < p.block_count(); ++b)
        if (lower_of[b] >= 0) low[lower_of[b]] = b;
    labels.insert(labels.end(), low.begin(), low.end());
    ProjectivePartition r{p, Partition::from_labels(k, T, labels), T};
    CompositionResult back = compose(involution(r.half), r.half);
    if (back.partition != p || back.loops != 0) throw std::logic_error("through_factor does not recompose: " + to_text(p));
    return r;
}

Partition twisted(const Partition& half, const Perm& sigma) {
    Partition s = permutation_partition(sigma);
    return compose(involution(half), compose(s, half).partition).partition;
}

PermGroup half_group(const Category& c, const Partition& half, int cap) {
    const int T = half.lower();
    if (T > cap) throw std::length_error("group too large: T = " + std::to_string(T) + " exceeds cap " + std::to_string(cap));
    std::vector<Perm> els;
    Perm s = perm_identity(T);
    do
        if (c.contains(twisted(half, s))) els.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return PermGroup(T, std::move(els));
}

PermGroup group_S(const Category& c, const ProjectivePartition& p, int cap) { return half_group(c, p.half, cap); }

bool are_equivalent(const Category& c, const Partition& p, const Partition& q) {
    if (p.upper() != q.upper()) return false;
    const int T = through_blocks(p);
    if (through_blocks(q) != T) return false;
    for (const auto& r : c.enumerate(p.upper(), p.upper())) {
        if (through_blocks(r) != T) continue;
        Partition rs = involution(r);
        if (compose(r, rs).partition == p && compose(rs, r).partition == q) return true;
    }
    return false;
}

std::vector<Partition> proj_C(const Category& c, int k) {
    std::vector<Partition> out;
    for (const auto& p : c.enumerate(k, k))
        if (is_projective(p)) out.push_back(p);
    return out;
}

std::vector<Partition> script_P(const Category& c, int k) {
    std::vector<Partition> proj = proj_C(c, k);
    Index idx = index_of(proj);
    std::vector<char> hit(proj.size(), 0);
    for (int l = 0; l < k; ++l) {
        const auto& bs = c.enumerate(k, l);
        if (bs.empty()) continue;
        std::vector<Partition> ql = proj_C(c, l);
#pragma omp parallel
        {
            std::vector<char> local(proj.size(), 0);
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < static_cast<long long>(bs.size()); ++i) {
                const Partition& b = bs[i];
                Partition bi = involution(b);
                for (const auto& q : ql) {
                    Partition x = compose(bi, compose(q, b).partition).partition;
                    auto it = idx.find(x);
                    if (it != idx.end()) local[it->second] = 1;
                }
            }
#pragma omp critical
            for (std::size_t i = 0; i < local.size(); ++i) hit[i] |= local[i];
        }
    }
    std::vector<Partition> out;
    for (std::size_t i = 0; i < proj.size(); ++i)
        if (!hit[i]) out.push_back(proj[i]);
    return out;
}

std::vector<Partition> script_P_via_ideal(const Category& c, int k) {
    std::vector<Partition> proj = proj_C(c, k);
    Partition nu;
    if (c.has_singleton() && k >= 1)
        nu = tensor(identity(k - 1), Pab());
    else if (!c.has_singleton() && k >= 2)
        nu = tensor(identity(k - 2), Paabb());
    else
        return proj;
    // Products of partitions are multiples of partitions, so the ideal is
    // spanned by the partitions a nu b.
    std::unordered_set<Partition, PartitionHash> ideal;
    const auto& ck = c.enumerate(k, k);
    for (const auto& a : ck) {
        Partition an = compose(a, nu).partition;
        for (const auto& b : ck) ideal.insert(compose(an, b).partition);
    }
    std::vector<Partition> out;
    for (const auto& p : proj)
        if (!ideal.count(p)) out.push_back(p);
    return out;
}

bool closed_form_in_script_P(Family f, const Partition& p) {
    const int k = p.upper();
    switch (f) {
        case Family::P:
        case Family::P2:
        case Family::P_b:
        case Family::NC:
        case Family::NC2:
        case Family::NC_b:
            return p == identity(k);
        case Family::P_prime:
        case Family::P_b_prime:
        case Family::NC_prime:
        case Family::NC_b_prime:
            return through_blocks(p) >= k - 1;
        case Family::NC_b_sharp: {
            // Tensor words in id_1 and Pab with no two Pab adjacent; t(p) >= k-1
            // alone misses Pab (x) id_1 (x) Pab.
            bool prev_single = false;
            for (int i = 0; i < k; ++i) {
                const int a = p.upper_label(i), b = p.lower_label(i);
                int na = 0, nb = 0;
                for (int x = 0; x < p.points(); ++x) {
                    na += p.label(x) == a;
                    nb += p.label(x) == b;
                }
                bool through = a == b && na == 2;
                bool single = na == 1 && nb == 1;
                if (!through && !single) return false;
                if (single && prev_single) return false;
                prev_single = single;
            }
            return true;
        }
        case Family::P_even:
        case Family::NC_even: {
            std::vector<int> up(p.block_count(), 0), low(p.block_count(), 0);
            for (int i = 0; i < k; ++i) ++up[p.upper_label(i)];
            for (int j = 0; j < p.lower(); ++j) ++low[p.lower_label(j)];
            for (int b = 0; b < p.block_count(); ++b)
                if (up[b] == 0 || low[b] == 0 || up[b] > 2 || low[b] > 2) return false;
            return true;
        }
    }
    return false;
}

std::vector<CensusDegree> census(const Category& c, int kmax, const Rational& t0, int group_cap) {
    if (sgn(t0) == 0) throw std::domain_error("census: the classification needs t != 0");
    std::vector<CensusDegree> out;
    for (int k = 0; k <= kmax; ++k) {
        CensusDegree d;
        d.k = k;
        std::vector<Partition> sp = script_P(c, k);
        d.script_p_size = sp.size();
        Index idx = index_of(sp);
        UnionFind uf(sp.size());
        const auto& ck = c.enumerate(k, k);
        std::vector<std::pair<std::size_t, std::size_t>> links;
#pragma omp parallel
        {
            std::vector<std::pair<std::size_t, std::size_t>> local;
#pragma omp for schedule(dynamic, 64)
            for (long long i = 0; i < static_cast<long long>(ck.size()); ++i) {
                const Partition& r = ck[i];
                Partition rs = involution(r);
                auto a = idx.find(compose(r, rs).partition);
                if (a == idx.end()) continue;
                auto b = idx.find(compose(rs, r).partition);
                if (b == idx.end()) continue;
                if (a->second != b->second) local.emplace_back(a->second, b->second);
            }
#pragma omp critical
            links.insert(links.end(), local.begin(), local.end());
        }
        for (auto [a, b] : links) uf.unite(a, b);
        for (auto& members : components(uf, sp)) {
            CensusClass cl;
            cl.representative = members.front();
            cl.members = std::move(members);
            ProjectivePartition pp = make_projective(cl.representative);
            cl.T = pp.T;
            PermGroup g = group_S(c, pp, group_cap);
            cl.group_order = g.order();
            cl.class_count = g.class_count();
            d.new_indecomposables += cl.class_count;
            d.classes.push_back(std::move(cl));
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<SurjectiveDegree> surjective_census(const Category& c, const std::vector<CensusDegree>& cen, int group_cap) {
    std::vector<SurjectiveDegree> out;
    std::vector<std::vector<Partition>> sur;
    for (const auto& cd : cen) {
        const int k = cd.k;
        // Sur_C(k): q in P(k,l) with l through-blocks and q* q in C.
        std::vector<Partition> sk;
        for (int l = 0; l <= k; ++l)
            for (const auto& q : all_partitions(k, l))
                if (through_blocks(q) == l && c.contains(compose(involution(q), q).partition)) sk.push_back(q);
        Index idx = index_of(sk);
        std::vector<char> decomposable(sk.size(), 0);
        for (int kp = 0; kp < k; ++kp) {
            const auto& bs = c.enumerate(k, kp);
            for (const auto& b : bs)
                for (const auto& q : sur[kp]) {
                    auto it = idx.find(compose(q, b).partition);
                    if (it != idx.end()) decomposable[it->second] = 1;
                }
        }
        std::vector<Partition> qk;
        for (std::size_t i = 0; i < sk.size(); ++i)
            if (!decomposable[i]) qk.push_back(sk[i]);

        // q ~ q' iff q r = s q' and q = s q' r* for some r in C(k,k), s in S_l.
        std::unordered_map<Partition, std::vector<std::pair<std::size_t, Perm>>, PartitionHash> orbit;
        for (std::size_t j = 0; j < qk.size(); ++j) {
            Perm s = perm_identity(qk[j].lower());
            do orbit[compose(permutation_partition(s), qk[j]).partition].emplace_back(j, s);
            while (std::next_permutation(s.begin(), s.end()));
        }
        UnionFind uf(qk.size());
        const auto& ck = c.enumerate(k, k);
        for (std::size_t i = 0; i < qk.size(); ++i)
            for (const auto& r : ck) {
                auto it = orbit.find(compose(qk[i], r).partition);
                if (it == orbit.end()) continue;
                Partition rs = involution(r);
                for (const auto& [j, s] : it->second)
                    if (uf.find(i) != uf.find(j) && compose(permutation_partition(s), compose(qk[j], rs).partition).partition == qk[i])
                        uf.unite(i, j);
            }
        auto classes = components(uf, qk);

        SurjectiveDegree d;
        d.k = k;
        d.sur_size = sk.size();
        d.q_size = qk.size();
        d.q_classes = classes.size();
        d.p_classes = cd.classes.size();
        std::map<Partition, std::size_t> p_class_of;
        for (std::size_t i = 0; i < cd.classes.size(); ++i)
            for (const auto& m : cd.classes[i].members) p_class_of[m] = i;
        std::vector<int> hits(cd.classes.size(), 0);
        bool mapped = true;
        d.groups_match = true;
        for (const auto& cl : classes) {
            const Partition& q = cl.front();
            d.representatives.push_back(q);
            auto it = p_class_of.find(compose(involution(q), q).partition);
            if (it == p_class_of.end()) {
                mapped = false;
                d.groups_match = false;
                continue;
            }
            ++hits[it->second];
            PermGroup g = half_group(c, q, group_cap);
            const CensusClass& pc = cd.classes[it->second];
            if (g.order() != pc.group_order || g.class_count() != pc.class_count) d.groups_match = false;
        }
        d.bijection = mapped && d.q_classes == d.p_classes && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
        out.push_back(std::move(d));
        sur.push_back(std::move(sk));
    }
    return out;
}

}  // namespace partcat
