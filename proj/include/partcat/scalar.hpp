#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace partcat {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s);  // "p/q" or "p"
std::string to_string(const Rational& q);
Rational rational_pow(const Rational& x, int e);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Finitely supported sum of c_e t^e, e in Z; zero coefficients never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT constant
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
    static LaurentPoly monomial(int e, const Rational& c = 1);
    static LaurentPoly t() { return monomial(1); }

    const std::map<int, Rational>& terms() const { return c_; }
    Rational coeff(int e) const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    int min_degree() const;  // requires !is_zero()
    int max_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly pow(int n) const;  // n >= 0, or any n for monomials
    // Throws std::domain_error when x = 0 meets a negative exponent.
    Rational evaluate(const Rational& x) const;

    void add_term(int e, const Rational& c);

private:
    std::map<int, Rational> c_;
};

inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
std::string to_string(const LaurentPoly& p, const std::string& var = "t");

// Dense polynomial over Q, coefficients low to high, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial x() { return Polynomial(std::vector<Rational>{0, 1}); }
    static Polynomial monomial(int e, const Rational& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial scaled(const Rational& s) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    Polynomial substitute_power(int m) const;  // p(x^m)
    Rational evaluate(const Rational& x) const;
    LaurentPoly to_laurent(int shift = 0) const;

    // Quotient and remainder by a nonzero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
std::string to_string(const Polynomial& p, const std::string& var = "t");

// Reduced fraction num/den with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(Polynomial n, Polynomial d);
    static RationalFunction from_laurent(const LaurentPoly& p);
    static RationalFunction variable() { return RationalFunction(Polynomial::x(), Polynomial(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction pow(int n) const;
    RationalFunction substitute_power(int m) const;  // f(x^m)
    // Throws std::domain_error on a pole.
    Rational evaluate(const Rational& x) const;

private:
    void normalize();
    Polynomial num_, den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
std::string to_string(const RationalFunction& f, const std::string& var = "t");

}  // namespace partcat
