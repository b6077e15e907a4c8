#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partcat/category.hpp"
#include "partcat/partition.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

// Formal linear combination of partitions of one shape, coefficients in R.
// R needs +, *, unary -, construction from long and is_zero(R).
template <class R>
class MorphismT {
public:
    MorphismT() = default;
    MorphismT(int source, int target) : source_(source), target_(target) {}
    static MorphismT basis(const Partition& p, const R& c = R(1)) {
        MorphismT m(p.upper(), p.lower());
        m.add(p, c);
        return m;
    }

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<Partition, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    R coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add(const Partition& p, const R& c) {
        if (p.upper() != source_ || p.lower() != target_) throw std::invalid_argument("morphism term has the wrong shape");
        if (partcat::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (partcat::is_zero(it->second)) terms_.erase(it);
        }
    }

    MorphismT& operator+=(const MorphismT& o) {
        check_shape(o);
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    MorphismT& operator-=(const MorphismT& o) {
        check_shape(o);
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    friend MorphismT operator+(MorphismT a, const MorphismT& b) { return a += b; }
    friend MorphismT operator-(MorphismT a, const MorphismT& b) { return a -= b; }
    friend MorphismT operator*(const R& s, const MorphismT& m) {
        MorphismT r(m.source_, m.target_);
        for (const auto& [p, c] : m.terms_) r.add(p, s * c);
        return r;
    }
    friend bool operator==(const MorphismT&, const MorphismT&) = default;

    template <class F>
    auto map_coefficients(F f) const {
        using S = decltype(f(std::declval<R>()));
        MorphismT<S> r(source_, target_);
        for (const auto& [p, c] : terms_) r.add(p, f(c));
        return r;
    }

private:
    void check_shape(const MorphismT& o) const {
        if (o.source_ != source_ || o.target_ != target_) throw std::invalid_argument("morphism shape mismatch");
    }
    int source_ = 0, target_ = 0;
    std::map<Partition, R> terms_;
};

// g after f; each pair contributes loop_value^loops times the composite.
template <class R>
MorphismT<R> compose(const MorphismT<R>& g, const MorphismT<R>& f, const R& loop_value) {
    if (g.source() != f.target()) throw std::invalid_argument("morphism compose: shape mismatch");
    MorphismT<R> r(f.source(), g.target());
    std::vector<R> powers{R(1)};
    for (const auto& [pg, cg] : g.terms())
        for (const auto& [pf, cf] : f.terms()) {
            CompositionResult c = compose(pg, pf);
            while (static_cast<int>(powers.size()) <= c.loops) powers.push_back(powers.back() * loop_value);
            r.add(c.partition, cg * cf * powers[c.loops]);
        }
    return r;
}

template <class R>
MorphismT<R> tensor(const MorphismT<R>& a, const MorphismT<R>& b) {
    MorphismT<R> r(a.source() + b.source(), a.target() + b.target());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) r.add(tensor(pa, pb), ca * cb);
    return r;
}

template <class R>
MorphismT<R> involution(const MorphismT<R>& a) {
    MorphismT<R> r(a.target(), a.source());
    for (const auto& [p, c] : a.terms()) r.add(involution(p), c);
    return r;
}

template <class R>
R trace(const MorphismT<R>& f, const R& loop_value) {
    if (f.source() != f.target()) throw std::invalid_argument("trace of a non-square morphism");
    R s(0);
    for (const auto& [p, c] : f.terms()) {
        R w(1);
        for (int i = close_trace(p); i > 0; --i) w = w * loop_value;
        s += c * w;
    }
    return s;
}

using Morphism = MorphismT<LaurentPoly>;
using RationalMorphism = MorphismT<Rational>;

Morphism mor_compose(const Morphism& g, const Morphism& f);
LaurentPoly mor_trace(const Morphism& f);
RationalMorphism evaluate(const Morphism& f, const Rational& t0);
RationalMorphism compose_at(const RationalMorphism& g, const RationalMorphism& f, const Rational& t0);
Rational trace_at(const RationalMorphism& f, const Rational& t0);

// x_p = p - sum over strict coarsenings q of p of x_q.
Morphism x_basis(const Category& c, const Partition& p);
// True iff tr(f g) = 0 at t0 for every basis partition g of C(target, source).
bool is_negligible(const Category& c, const RationalMorphism& f, const Rational& t0);
bool is_negligible(const Category& c, const Morphism& f, const Rational& t0);

std::string to_string(const Morphism& f);

}  // namespace partcat
