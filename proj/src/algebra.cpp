#include <sstream>

#include "partcat/morphism.hpp"

namespace partcat {

Morphism mor_compose(const Morphism& g, const Morphism& f) { return compose(g, f, LaurentPoly::t()); }

LaurentPoly mor_trace(const Morphism& f) {
    if (f.source() != f.target()) throw std::invalid_argument("trace of a non-square morphism");
    LaurentPoly s;
    for (const auto& [p, c] : f.terms()) s += c * LaurentPoly::monomial(close_trace(p));
    return s;
}

RationalMorphism evaluate(const Morphism& f, const Rational& t0) {
    return f.map_coefficients([&](const LaurentPoly& c) { return c.evaluate(t0); });
}

RationalMorphism compose_at(const RationalMorphism& g, const RationalMorphism& f, const Rational& t0) {
    return compose(g, f, t0);
}

Rational trace_at(const RationalMorphism& f, const Rational& t0) { return trace(f, t0); }

namespace {

const Morphism& x_basis_rec(const Category& c, const Partition& p, std::map<Partition, Morphism>& memo) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    Morphism x = Morphism::basis(p);
    for (const Partition& q : coarsenings(p)) {
        if (q == p) continue;
        if (!c.contains(q))
            throw std::domain_error("x_basis: coarsening " + to_text(q) + " of " + to_text(p) + " is not in " + c.name());
        x -= x_basis_rec(c, q, memo);
    }
    return memo.emplace(p, std::move(x)).first->second;
}

}  // namespace

Morphism x_basis(const Category& c, const Partition& p) {
    if (!c.contains(p)) throw std::domain_error("x_basis: " + to_text(p) + " is not in " + c.name());
    std::map<Partition, Morphism> memo;
    return x_basis_rec(c, p, memo);
}

bool is_negligible(const Category& c, const RationalMorphism& f, const Rational& t0) {
    for (const Partition& g : c.enumerate(f.target(), f.source())) {
        RationalMorphism fg = compose(f, RationalMorphism::basis(g), t0);
        if (sgn(trace(fg, t0)) != 0) return false;
    }
    return true;
}

bool is_negligible(const Category& c, const Morphism& f, const Rational& t0) {
    return is_negligible(c, evaluate(f, t0), t0);
}

std::string to_string(const Morphism& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*[" << to_text(p) << "]";
    }
    return os.str();
}

}  // namespace partcat
