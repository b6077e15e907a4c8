#include "partcat/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace partcat {

namespace {

Polynomial to_q(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// Clears denominators; keeps the sign of the leading coefficient.
IntPoly to_z(const Polynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) out.push_back(Integer(c * l));
    IntPoly r(std::move(out));
    Integer g = r.content();
    if (g > 1) {
        std::vector<Integer> d = r.coeffs();
        for (auto& v : d) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        r = IntPoly(std::move(d));
    }
    return r;
}

// Pseudo-remainder without the trailing lc power; returns the number of
// reduction steps so callers can recover the sign of the scaling.
IntPoly lazy_prem(const IntPoly& a, const IntPoly& b, int& steps) {
    std::vector<Integer> r = a.coeffs();
    const std::vector<Integer>& bc = b.coeffs();
    const int db = b.degree();
    const Integer& l = b.leading();
    steps = 0;
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db && dr >= 0) {
        Integer s = r[dr];
        if (s != 0) {
            // r = l*r - s*t^(dr-db)*b, with common factors cancelled.
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), s.get_mpz_t());
            Integer lf = l / g, sf = s / g;
            for (int i = 0; i < dr; ++i) r[i] *= lf;
            int off = dr - db;
            for (int i = 0; i < db; ++i) r[i + off] -= sf * bc[i];
            if (sgn(lf) < 0) ++steps;
        }
        r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
        while (dr >= 0 && r[dr] == 0) {
            r.pop_back();
            --dr;
        }
    }
    return IntPoly(std::move(r));
}

IntPoly divide_content_keep_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = p.content();
    if (g == 1) return p;
    std::vector<Integer> d = p.coeffs();
    for (auto& v : d) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(d));
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int e, const Integer& c) {
    std::vector<Integer> v(e + 1, Integer(0));
    v[e] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& a, const Integer& b) { return IntPoly({b, a}); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    std::vector<Integer> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(r));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    IntPoly r = divide_content_keep_sign(*this);
    if (sgn(r.leading()) < 0)
        for (auto& v : r.c_) v = -v;
    return r;
}

int IntPoly::trailing_zeros() const {
    int z = 0;
    while (z < static_cast<int>(c_.size()) && c_[z] == 0) ++z;
    return z;
}

IntPoly IntPoly::shift_down(int n) const {
    for (int i = 0; i < n && i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0) throw std::domain_error("shift_down: not divisible by t^n");
    if (n >= static_cast<int>(c_.size())) return IntPoly();
    return IntPoly(std::vector<Integer>(c_.begin() + n, c_.end()));
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

int IntPoly::sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer s = c_.back(), qp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        qp *= q;
        s = s * p + c_[i] * qp;
    }
    return sgn(s);
}

long double IntPoly::evaluate_ld(long double x) const {
    long double s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + static_cast<long double>(it->get_d());
    return s;
}

LaurentPoly IntPoly::to_laurent() const {
    LaurentPoly r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.add_term(static_cast<int>(i), Rational(c_[i]));
    return r;
}

IntPoly IntPoly::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return IntPoly();
    if (p.min_degree() < 0) throw std::domain_error("negative exponent in integer polynomial");
    std::vector<Integer> c(p.max_degree() + 1, Integer(0));
    for (const auto& [e, v] : p.terms()) {
        if (v.get_den() != 1) throw std::domain_error("non-integer coefficient in integer polynomial");
        c[e] = v.get_num();
    }
    return IntPoly(std::move(c));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    Polynomial q, r;
    Polynomial::divmod(to_q(a), to_q(b), q, r);
    if (!r.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
    return to_z(q);
}

bool divide_linear(IntPoly& f, const Rational& root) {
    if (f.is_zero()) return false;
    const Integer& p = root.get_num();
    const Integer& q = root.get_den();
    const auto& a = f.coeffs();
    const int n = f.degree();
    if (n < 1) return false;
    std::vector<Integer> b(n);
    // a(t) = (q t - p) b(t): a_n = q b_{n-1}, a_i = q b_{i-1} - p b_i.
    Integer cur;
    if (!mpz_divisible_p(a[n].get_mpz_t(), q.get_mpz_t())) return false;
    b[n - 1] = a[n] / q;
    for (int i = n - 1; i >= 1; --i) {
        cur = a[i] + p * b[i];
        if (!mpz_divisible_p(cur.get_mpz_t(), q.get_mpz_t())) return false;
        b[i - 1] = cur / q;
    }
    if (a[0] + p * b[0] != 0) return false;
    f = IntPoly(std::move(b));
    return true;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = a0.primitive(), b = b0.primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        int steps;
        IntPoly r = lazy_prem(a, b, steps);
        a = std::move(b);
        b = r.primitive();
    }
    return a.primitive();
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& f0) {
    std::vector<IntPoly> out;
    IntPoly f = f0.primitive();
    if (f.degree() < 1) return out;
    // Yun over Q; gcds via primitive PRS, divisions exact.
    Polynomial fq = to_q(f);
    Polynomial dq = fq.derivative();
    Polynomial a = to_q(gcd(f, to_z(dq))).monic();
    Polynomial b, c, rem;
    Polynomial::divmod(fq, a, b, rem);
    Polynomial::divmod(dq, a, c, rem);
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial g = to_q(gcd(to_z(b), to_z(d))).monic();
        if (d.is_zero()) g = b.monic();
        out.push_back(to_z(g).primitive());
        Polynomial nb, nc;
        Polynomial::divmod(b, g, nb, rem);
        Polynomial::divmod(d, g, nc, rem);
        b = nb;
        c = nc;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    for (auto& p : out)
        if (p.degree() == 0) p = IntPoly({Integer(1)});
    return out;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
    std::vector<IntPoly> seq;
    if (f.is_zero()) return seq;
    seq.push_back(divide_content_keep_sign(f));
    IntPoly d = f.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(divide_content_keep_sign(d));
    while (true) {
        const IntPoly& a = seq[seq.size() - 2];
        const IntPoly& b = seq.back();
        int steps;
        IntPoly r = lazy_prem(a, b, steps);
        if (r.is_zero()) break;
        // r = l^m * rem with the sign of l^m tracked by `steps`; next = -rem.
        r = divide_content_keep_sign(r);
        bool flip = (steps % 2 == 0);
        if (flip) r = IntPoly() - r;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_variations(const std::vector<IntPoly>& seq, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sign_variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
    int v = 0, last = 0;
    for (const auto& p : seq) {
        if (p.is_zero()) continue;
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::string to_string(const IntPoly& p, const std::string& var) { return to_string(p.to_laurent(), var); }

}  // namespace partcat
