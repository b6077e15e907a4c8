#pragma once

#include <string>
#include <vector>

#include "partcat/scalar.hpp"

namespace partcat {

// Dense polynomial over Z, coefficients low to high, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c);
    static IntPoly monomial(int e, const Integer& c = 1);
    static IntPoly linear(const Integer& a, const Integer& b);  // a*t + b

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[i] : Integer(0); }
    const Integer& leading() const { return c_.back(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly derivative() const;
    Integer content() const;
    IntPoly primitive() const;  // content removed, positive leading coefficient
    int trailing_zeros() const;
    IntPoly shift_down(int n) const;  // divide by t^n (exact)
    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const;
    long double evaluate_ld(long double x) const;

    LaurentPoly to_laurent() const;
    static IntPoly from_laurent(const LaurentPoly& p);  // integer coefficients, exponents >= 0

private:
    void trim();
    std::vector<Integer> c_;
};

// Exact quotient a / b over Q, returned as a primitive integer polynomial;
// throws if the division leaves a remainder.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
// Divides out (den*t - num) once if it is a factor; returns false otherwise.
bool divide_linear(IntPoly& f, const Rational& root);
// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Yun's square-free decomposition of a primitive polynomial:
// result[i] collects the roots of multiplicity i+1.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& f);
std::vector<IntPoly> sturm_sequence(const IntPoly& f);
int sign_variations(const std::vector<IntPoly>& seq, const Rational& x);
int sign_variations_at_infinity(const std::vector<IntPoly>& seq, bool positive);

std::string to_string(const IntPoly& p, const std::string& var = "t");

}  // namespace partcat
