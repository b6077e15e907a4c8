#include "partcat/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "partcat/lattice.hpp"

namespace partcat {

namespace {

using cld = std::complex<long double>;

long double to_ld(const Integer& v) {
    long e;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
}

Integer cauchy_bound(const IntPoly& h) {
    Integer lc = abs(h.leading()), mx = 0;
    for (int i = 0; i < h.degree(); ++i) mx = std::max(mx, Integer(abs(h.coeffs()[i])));
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

// A point of (a,b) where h does not vanish.
Rational split_point(const IntPoly& h, const Rational& a, const Rational& b) {
    static const int fr[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {5, 11}, {6, 11}};
    for (const auto& f : fr) {
        Rational m = a + (b - a) * Rational(f[0], f[1]);
        if (h.sign_at(m) != 0) return m;
    }
    // Finitely many roots, so a denser probe always succeeds.
    for (int d = 13;; d += 2) {
        Rational m = a + (b - a) * Rational(d / 2, d);
        if (h.sign_at(m) != 0) return m;
    }
}

struct Isolated {
    Rational a, b;  // root in (a,b]
};

std::vector<Isolated> isolate(const IntPoly& h, const std::vector<IntPoly>& sturm) {
    Integer B = cauchy_bound(h);
    std::vector<Isolated> out;
    std::vector<std::pair<Rational, Rational>> stack{{Rational(-B), Rational(B)}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int c = sign_variations(sturm, a) - sign_variations(sturm, b);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back({a, b});
            continue;
        }
        Rational m = split_point(h, a, b);
        stack.push_back({m, b});
        stack.push_back({a, m});
    }
    std::sort(out.begin(), out.end(), [](const Isolated& x, const Isolated& y) { return x.a < y.a; });
    return out;
}

// Shrinks (a,b] around its single simple root; returns true with an exact
// root in `exact` when one is met on the way.
bool refine(const IntPoly& h, Rational& a, Rational& b, const Rational& width, Rational& exact) {
    if (h.sign_at(b) == 0) {
        exact = b;
        return true;
    }
    int sa = h.sign_at(a);
    while (b - a >= width) {
        Rational m = (a + b) / 2;
        int sm = h.sign_at(m);
        if (sm == 0) {
            exact = m;
            return true;
        }
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    return false;
}

std::vector<cld> aberth(const IntPoly& h) {
    const int n = h.degree();
    std::vector<long double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = to_ld(h.coeffs()[i]);
    auto eval = [&](cld z, cld& d) {
        cld p = c[n];
        d = 0;
        for (int i = n - 1; i >= 0; --i) {
            d = d * z + p;
            p = p * z + c[i];
        }
        return p;
    };
    long double r = std::pow(std::abs(c[0] / c[n]), 1.0L / n);
    if (!(r > 0) || !std::isfinite(r)) r = 1;
    std::vector<cld> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::polar(r, 2 * std::numbers::pi_v<long double> * i / n + 0.4L);
    for (int it = 0; it < 5000; ++it) {
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            cld d;
            cld p = eval(z[i], d);
            if (p == cld(0)) continue;
            cld ratio = p / d;
            cld s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            cld w = ratio / (1.0L - ratio * s);
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 1e-18L) break;
    }
    for (auto& x : z)
        for (int k = 0; k < 3; ++k) {
            cld d;
            cld p = eval(x, d);
            if (d != cld(0)) x -= p / d;
        }
    return z;
}

void set_flags(NumericRoot& r) {
    const double tol = 1e-9;
    bool real = std::abs(r.im) < tol;
    double rr = std::round(r.re);
    r.in_z = real && std::abs(r.re - rr) < tol;
    r.in_n0 = r.in_z && rr >= 0;
    r.in_2cos = near_2cos(r.re, r.im);
    r.in_4cos2 = near_4cos2(r.re, r.im);
}

}  // namespace

bool near_2cos(double re, double im, int max_l, double tol) {
    if (std::abs(im) >= tol) return false;
    for (int l = 2; l <= max_l; ++l)
        for (int j = 1; j < l; ++j)
            if (std::abs(re - 2 * std::cos(j * std::numbers::pi / l)) < tol) return true;
    return false;
}

bool near_4cos2(double re, double im, int max_l, double tol) {
    if (std::abs(im) >= tol) return false;
    for (int l = 2; l <= max_l; ++l)
        for (int j = 1; j < l; ++j) {
            double c = std::cos(j * std::numbers::pi / l);
            if (std::abs(re - 4 * c * c) < tol) return true;
        }
    return false;
}

RootReport analyze_roots(const IntPoly& f) {
    RootReport rep;
    rep.poly = f;
    if (f.is_zero()) {
        rep.verdict = "zero";
        rep.all_in_n0 = rep.all_in_z = rep.all_in_2cos = rep.all_in_4cos2 = false;
        return rep;
    }
    std::vector<NumericRoot> irrational;
    int z = f.trailing_zeros();
    if (z > 0) rep.rational_roots.push_back({Rational(0), z});
    IntPoly g = f.shift_down(z).primitive();

    // Small integer roots first; they carry most of the degree.
    for (long m = 1; m <= 64 && g.degree() > 0; ++m)
        for (long sm : {m, -m}) {
            if (!mpz_divisible_ui_p(g.coeffs()[0].get_mpz_t(), static_cast<unsigned long>(m))) continue;
            int mult = 0;
            while (g.degree() > 0 && divide_linear(g, Rational(sm))) ++mult;
            if (mult > 0) rep.rational_roots.push_back({Rational(sm), mult});
        }

    // Roots stripped so far never reach the Sturm stage.
    rep.distinct_real_roots = static_cast<int>(rep.rational_roots.size());
    if (g.degree() > 0) {
        auto sqf = squarefree_decomposition(g);
        for (std::size_t i = 0; i < sqf.size(); ++i) {
            const IntPoly& h = sqf[i];
            if (h.degree() < 1) continue;
            const int mult = static_cast<int>(i) + 1;
            auto sturm = sturm_sequence(h);
            auto iso = isolate(h, sturm);
            Rational inv_lc(Integer(1), abs(h.leading()));
            Rational fine(1, 1L << 45);
            for (auto& I : iso) {
                Rational exact;
                if (refine(h, I.a, I.b, inv_lc, exact)) {
                    rep.rational_roots.push_back({exact, mult});
                    continue;
                }
                // The only candidate with denominator dividing lc.
                Integer lc = abs(h.leading());
                Integer num = I.a.get_num() * lc;
                Integer c;
                mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), I.a.get_den().get_mpz_t());
                Rational cand(c, lc);
                cand.canonicalize();
                if (cand <= I.a) cand += inv_lc;
                if (cand <= I.b && h.sign_at(cand) == 0) {
                    rep.rational_roots.push_back({cand, mult});
                    continue;
                }
                if (refine(h, I.a, I.b, fine, exact)) {
                    rep.rational_roots.push_back({exact, mult});
                    continue;
                }
                NumericRoot r;
                r.re = Rational((I.a + I.b) / 2).get_d();
                r.multiplicity = mult;
                irrational.push_back(r);
            }
            rep.distinct_real_roots += static_cast<int>(iso.size());
            int nonreal = h.degree() - static_cast<int>(iso.size());
            if (nonreal > 0) {
                auto zs = aberth(h);
                std::sort(zs.begin(), zs.end(), [](const cld& x, const cld& y) { return std::abs(x.imag()) > std::abs(y.imag()); });
                for (int j = 0; j < nonreal; ++j) {
                    NumericRoot r;
                    r.re = static_cast<double>(zs[j].real());
                    r.im = static_cast<double>(zs[j].imag());
                    r.multiplicity = mult;
                    irrational.push_back(r);
                }
            }
        }
    }
    std::sort(rep.rational_roots.begin(), rep.rational_roots.end(), [](const ExactRoot& x, const ExactRoot& y) { return x.value < y.value; });
    rep.distinct_rational_roots = static_cast<int>(rep.rational_roots.size());

    for (const auto& r : rep.rational_roots) {
        NumericRoot n;
        n.re = r.value.get_d();
        n.multiplicity = r.multiplicity;
        set_flags(n);
        n.in_z = r.value.get_den() == 1;
        n.in_n0 = n.in_z && sgn(r.value) >= 0;
        rep.numeric_roots.push_back(n);
    }
    for (auto& n : irrational) {
        set_flags(n);
        n.in_z = n.in_n0 = false;
        rep.numeric_roots.push_back(n);
    }
    std::stable_sort(rep.numeric_roots.begin(), rep.numeric_roots.end(), [](const NumericRoot& x, const NumericRoot& y) {
        bool rx = x.im == 0, ry = y.im == 0;
        if (rx != ry) return rx;
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    for (const auto& n : rep.numeric_roots) {
        rep.all_in_n0 = rep.all_in_n0 && n.in_n0;
        rep.all_in_z = rep.all_in_z && n.in_z;
        rep.all_in_2cos = rep.all_in_2cos && n.in_2cos;
        rep.all_in_4cos2 = rep.all_in_4cos2 && n.in_4cos2;
    }
    if (rep.numeric_roots.empty())
        rep.verdict = "none";
    else if (rep.all_in_n0)
        rep.verdict = "N0";
    else if (rep.all_in_z)
        rep.verdict = "Z";
    else if (rep.all_in_2cos)
        rep.verdict = "2cos";
    else if (rep.all_in_4cos2)
        rep.verdict = "4cos2";
    else
        rep.verdict = "mixed";
    return rep;
}

std::vector<ScanEntry> semisimplicity_scan(const Category& c, int kmax, Exec exec) {
    std::vector<ScanEntry> out;
    for (int k = 0; k <= kmax; ++k) {
        const auto& basis = c.enumerate(0, k);
        if (basis.empty()) continue;
        ScanEntry e;
        e.k = k;
        e.basis_size = basis.size();
        e.roots = analyze_roots(gram_det(c, k, exec));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace partcat
