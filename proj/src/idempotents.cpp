#include "partcat/idempotents.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

#include "partcat/category.hpp"

namespace partcat {

namespace {

bool is_nc_pairing(const Partition& p) {
    for (int s : p.block_sizes())
        if (s != 2) return false;
    return is_noncrossing(p);
}

// Circular position c: upper c for c < k, else lower l-1-(c-k).
Partition from_circular(int k, int l, const std::vector<int>& circ) {
    std::vector<int> lab(k + l);
    for (int c = 0; c < k + l; ++c) {
        if (c < k)
            lab[c] = circ[c];
        else
            lab[k + (l - 1 - (c - k))] = circ[c];
    }
    return Partition::from_labels(k, l, lab);
}

RationalFunction s_power(int e) {
    if (e >= 0) return RationalFunction(Polynomial::monomial(e), Polynomial(1));
    return RationalFunction(Polynomial(1), Polynomial::monomial(-e));
}

Rational s_power_at(const Rational& s, int e) { return rational_pow(s, e); }

}  // namespace

const JWIdempotent& jones_wenzl(int k) {
    if (k < 0) throw std::invalid_argument("jones_wenzl: negative level");
    static std::mutex mtx;
    static std::vector<std::unique_ptr<JWIdempotent>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    const RationalFunction t = RationalFunction::variable();
    while (static_cast<int>(cache.size()) <= k) {
        const int n = static_cast<int>(cache.size());
        auto jw = std::make_unique<JWIdempotent>();
        jw->k = n;
        if (n <= 1) {
            jw->e = RFMorphism::basis(identity(n));
            jw->ladder.assign(n, RationalFunction(0));
        } else {
            const JWIdempotent& prev = *cache.back();
            jw->ladder = prev.ladder;
            RationalFunction a = (t - prev.ladder.back()).inverse();
            jw->ladder.push_back(a);
            RFMorphism E = tensor(prev.e, RFMorphism::basis(identity(1)));
            RFMorphism U = RFMorphism::basis(tensor(identity(n - 2), Paabb()));
            RFMorphism EUE = compose(E, compose(U, E, t), t);
            jw->e = E - a * EUE;
        }
        cache.push_back(std::move(jw));
    }
    return *cache[k];
}

RationalMorphism evaluate_jw(int k, const Rational& t0) {
    RationalMorphism e = RationalMorphism::basis(identity(std::min(k, 1)));
    Rational a = 0;
    for (int n = 2; n <= k; ++n) {
        Rational d = t0 - a;
        if (sgn(d) == 0)
            throw std::domain_error("Jones-Wenzl e_" + std::to_string(k) + " undefined at t = " + to_string(t0) +
                                    ": ladder denominator vanishes at level " + std::to_string(n));
        a = 1 / d;
        RationalMorphism E = tensor(e, RationalMorphism::basis(identity(1)));
        RationalMorphism U = RationalMorphism::basis(tensor(identity(n - 2), Paabb()));
        e = E - a * compose(E, compose(U, E, t0), t0);
    }
    return e;
}

JWReport check_jones_wenzl(const JWIdempotent& jw) {
    const RationalFunction t = RationalFunction::variable();
    JWReport r;
    r.idempotent = compose(jw.e, jw.e, t) == jw.e;
    r.unit_identity = jw.e.coeff(identity(jw.k)) == RationalFunction(1);
    if (jw.k >= 2) {
        RFMorphism cap = RFMorphism::basis(tensor(identity(jw.k - 2), upper_pair()));
        RFMorphism cup = RFMorphism::basis(tensor(identity(jw.k - 2), lower_pair()));
        r.cap_kill = compose(cap, jw.e, t).is_zero();
        r.cup_kill = compose(jw.e, cup, t).is_zero();
    } else {
        r.cap_kill = r.cup_kill = true;
    }
    r.trace = trace(jw.e, t);
    return r;
}

Partition fatten(const Partition& thin) {
    if (thin.upper() % 2 || thin.lower() % 2 || !is_nc_pairing(thin))
        throw std::invalid_argument("fatten: not a noncrossing pairing with even rows: " + to_text(thin));
    const int k = thin.upper() / 2, l = thin.lower() / 2, n = k + l;
    std::vector<int> circ = circular_labels(thin);
    std::vector<std::pair<int, int>> chords;
    std::map<int, int> first;
    for (int c = 0; c < 2 * n; ++c) {
        auto [it, fresh] = first.emplace(circ[c], c);
        if (!fresh) chords.emplace_back(it->second, c);
    }
    // Fat point f sits between thin positions 2f and 2f+1.
    auto separated = [&](int f, int g) {
        for (auto [a, b] : chords) {
            bool inf = a <= 2 * f && 2 * f < b;
            bool ing = a <= 2 * g && 2 * g < b;
            if (inf != ing) return true;
        }
        return false;
    };
    std::vector<int> lab(n, -1);
    int nb = 0;
    for (int f = 0; f < n; ++f) {
        if (lab[f] >= 0) continue;
        lab[f] = nb;
        for (int g = f + 1; g < n; ++g)
            if (lab[g] < 0 && !separated(f, g)) lab[g] = nb;
        ++nb;
    }
    return from_circular(k, l, lab);
}

Partition unfatten(const Partition& fat) {
    if (!is_noncrossing(fat)) throw std::invalid_argument("unfatten: crossing partition " + to_text(fat));
    const int k = fat.upper(), l = fat.lower(), n = k + l;
    std::vector<int> circ = circular_labels(fat);
    std::vector<std::vector<int>> blocks(fat.block_count());
    for (int c = 0; c < n; ++c) blocks[circ[c]].push_back(c);
    std::vector<int> thin(2 * n, -1);
    int id = 0;
    for (const auto& b : blocks)
        for (std::size_t j = 0; j < b.size(); ++j) {
            int f = b[j], g = b[(j + 1) % b.size()];
            thin[2 * f + 1] = id;
            thin[2 * g] = id;
            ++id;
        }
    return from_circular(2 * k, 2 * l, thin);
}

int fatten_exponent(const Partition& thin) {
    const int k = thin.upper() / 2, l = thin.lower() / 2;
    Partition sq = l >= k ? tensor(thin, tensor_power(upper_pair(), l - k)) : tensor(thin, tensor_power(lower_pair(), k - l));
    return std::abs(k - l) + 2 * close_trace(sq) - 4 * close_trace(fatten(sq));
}

LaurentPoly fatten_scalar(const Partition& thin) { return LaurentPoly::monomial(fatten_exponent(thin)); }

Morphism functor_G(const Partition& thin) { return Morphism::basis(fatten(thin), fatten_scalar(thin)); }

RFMorphism functor_G(const RFMorphism& thin) {
    if (thin.source() % 2 || thin.target() % 2) throw std::invalid_argument("functor_G: odd object");
    RFMorphism r(thin.source() / 2, thin.target() / 2);
    for (const auto& [p, c] : thin.terms()) r.add(fatten(p), c.substitute_power(2) * s_power(fatten_exponent(p)));
    return r;
}

FatteningReport check_fattening(int max_thin_points, int max_fat_sum, std::uint64_t seed, int samples) {
    FatteningReport rep;
    Category nc2 = Category::named(Family::NC2);
    Category nc = Category::named(Family::NC);
    for (int k = 0; k <= max_fat_sum; ++k)
        for (int l = 0; k + l <= max_fat_sum; ++l) {
            const auto& thin = nc2.enumerate(2 * k, 2 * l);
            const auto& fat = nc.enumerate(k, l);
            if (thin.size() != fat.size()) rep.bijective = false;
            for (const auto& p : thin)
                if (unfatten(fatten(p)) != p) rep.bijective = false;
            for (const auto& q : fat)
                if (fatten(unfatten(q)) != q) rep.bijective = false;
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (static_cast<int>(rep.samples.size()) < samples) {
        Rational s(num(rng), den(rng));
        s.canonicalize();
        if (sgn(s) == 0 || s == 1 || s == -1) continue;
        rep.samples.push_back(s);
    }

    // Thin diagrams by half-shape (a,b) with 2a+2b <= max_thin_points.
    std::map<std::pair<int, int>, std::vector<std::pair<Partition, int>>> by_shape;
    std::vector<std::pair<Partition, int>> all;
    for (int a = 0; 2 * a <= max_thin_points; ++a)
        for (int b = 0; 2 * a + 2 * b <= max_thin_points; ++b)
            for (const auto& p : nc2.enumerate(2 * a, 2 * b)) {
                by_shape[{a, b}].emplace_back(p, fatten_exponent(p));
                all.emplace_back(p, fatten_exponent(p));
            }

    for (const auto& [shape_p, ps] : by_shape)
        for (const auto& [shape_q, qs] : by_shape) {
            if (shape_q.first != shape_p.second) continue;
            for (const auto& [p, ep] : ps)
                for (const auto& [q, eq] : qs) {
                    ++rep.compose_pairs;
                    CompositionResult thin = compose(q, p);
                    CompositionResult fat = compose(fatten(q), fatten(p));
                    int lhs = 2 * thin.loops + fatten_exponent(thin.partition);
                    int rhs = 4 * fat.loops + ep + eq;
                    if (fatten(thin.partition) != fat.partition || lhs != rhs) rep.compose_symbolic = false;
                    for (const auto& s : rep.samples) {
                        Rational l = s_power_at(s, 2 * thin.loops) * s_power_at(s, fatten_exponent(thin.partition));
                        Rational r = s_power_at(s, ep) * s_power_at(s, eq) * s_power_at(s, 4 * fat.loops);
                        if (l != r) rep.compose_numeric = false;
                    }
                }
        }

    for (const auto& [p, ep] : all)
        for (const auto& [q, eq] : all) {
            ++rep.tensor_pairs;
            Partition pq = tensor(p, q);
            int e = fatten_exponent(pq);
            if (fatten(pq) != tensor(fatten(p), fatten(q)) || e != ep + eq) rep.tensor_symbolic = false;
            for (const auto& s : rep.samples)
                if (s_power_at(s, e) != s_power_at(s, ep) * s_power_at(s, eq)) rep.tensor_numeric = false;
        }
    return rep;
}

bool functor_G_jw_idempotent(int k) {
    RFMorphism g = functor_G(jones_wenzl(2 * k).e);
    RationalFunction s4 = RationalFunction::variable().pow(4);
    return compose(g, g, s4) == g;
}

}  // namespace partcat
