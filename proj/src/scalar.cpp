#include "partcat/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace partcat {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: '" + s + "'");
    if (s.find('/') != std::string::npos && q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& x, int e) {
    if (e < 0) {
        if (sgn(x) == 0) throw std::domain_error("zero raised to a negative power");
        return rational_pow(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ---- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

int LaurentPoly::min_degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (c_.size() == 1) {
        auto [e, c] = *c_.begin();
        return monomial(e * n, rational_pow(c, n));
    }
    if (n < 0) throw std::domain_error("negative power of a non-monomial");
    LaurentPoly r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    Rational s = 0;
    for (const auto& [e, c] : c_) {
        if (e < 0 && sgn(x) == 0) throw std::domain_error("evaluation at 0 of a negative power of t");
        s += c * rational_pow(x, e);
    }
    return s;
}

namespace {

// Shared term printer: highest exponent first, "t^e" style.
template <class It>
std::string format_terms(It begin, It end, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (It it = begin; it != end; ++it) {
        int e = it->first;
        Rational c = it->second;
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = a == 1;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (!unit) os << a.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const LaurentPoly& p, const std::string& var) {
    return format_terms(p.terms().rbegin(), p.terms().rend(), var);
}

// ---- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int e, const Rational& c) {
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& s) const {
    if (sgn(s) == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::substitute_power(int m) const {
    if (is_zero()) return *this;
    std::vector<Rational> r((c_.size() - 1) * m + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * m] = c_[i];
    return Polynomial(std::move(r));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

LaurentPoly Polynomial::to_laurent(int shift) const {
    LaurentPoly r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.add_term(static_cast<int>(i) + shift, c_[i]);
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    if (a.degree() < b.degree()) {
        q = Polynomial();
        return;
    }
    std::vector<Rational> qc(a.degree() - b.degree() + 1, Rational(0));
    Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.leading() / lb;
        qc[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= f * b.c_[i];
        r.trim();
    }
    q = Polynomial(std::move(qc));
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::string to_string(const Polynomial& p, const std::string& var) {
    std::map<int, Rational> m;
    for (int i = 0; i <= p.degree(); ++i) m.emplace(i, p.coeff(i));
    return format_terms(m.rbegin(), m.rend(), var);
}

// ---- RationalFunction

RationalFunction::RationalFunction(Polynomial n, Polynomial d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return RationalFunction();
    int lo = p.min_degree();
    int shift = lo < 0 ? -lo : 0;
    std::vector<Rational> c(p.max_degree() + shift + 1, Rational(0));
    for (const auto& [e, v] : p.terms()) c[e + shift] = v;
    return RationalFunction(Polynomial(std::move(c)), Polynomial::monomial(shift));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            Polynomial q, r;
            Polynomial::divmod(num_, g, q, r);
            num_ = q;
            Polynomial::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Rational l = den_.leading();
    if (l != 1) {
        num_ = num_.scaled(Rational(1) / l);
        den_ = den_.scaled(Rational(1) / l);
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::substitute_power(int m) const {
    return RationalFunction(num_.substitute_power(m), den_.substitute_power(m));
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (sgn(d) == 0) throw std::domain_error("rational function has a pole at " + x.get_str());
    return num_.evaluate(x) / d;
}

std::string to_string(const RationalFunction& f, const std::string& var) {
    if (f.den() == Polynomial(1)) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace partcat
