#include "partcat/determinant.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace partcat {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("modular inverse of zero");
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

const std::vector<std::uint64_t>& primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t c = cache.empty() ? (1ull << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(c)) cache.push_back(c);
        c -= 2;
    }
    return cache;
}

std::uint64_t det_at(const ExponentMatrix& e, std::uint64_t x, std::uint64_t p) {
    const std::size_t n = e.size();
    int maxe = 0;
    for (const auto& row : e)
        for (int v : row) maxe = std::max(maxe, v);
    std::vector<std::uint64_t> pw(maxe + 1);
    pw[0] = 1 % p;
    for (int i = 1; i <= maxe; ++i) pw[i] = mul(pw[i - 1], x % p, p);
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = pw[e[i][j]];
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = det == 0 ? 0 : p - det;
        }
        std::uint64_t pv = a[c * n + c];
        det = mul(det, pv, p);
        std::uint64_t pinv = inv(pv, p);
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint64_t f = mul(a[i * n + c], pinv, p);
            if (f == 0) continue;
            std::uint64_t* ri = &a[i * n];
            const std::uint64_t* rc = &a[c * n];
            for (std::size_t j = c + 1; j < n; ++j) {
                std::uint64_t s = mul(f, rc[j], p);
                ri[j] = ri[j] >= s ? ri[j] - s : ri[j] + p - s;
            }
        }
    }
    return det;
}

}  // namespace modp

namespace {

// Newton interpolation through (x_j, v_j), j = 0..D, returned low to high.
std::vector<std::uint64_t> interpolate_modp(const std::vector<std::uint64_t>& xs, std::vector<std::uint64_t> c,
                                            std::uint64_t p) {
    const std::size_t m = xs.size();
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t j = m - 1; j >= k; --j) {
            std::uint64_t num = (c[j] + p - c[j - 1]) % p;
            std::uint64_t den = (xs[j] + p - xs[j - k]) % p;
            c[j] = modp::mul(num, modp::inv(den, p), p);
            if (j == k) break;
        }
    std::vector<std::uint64_t> poly{c[m - 1]};
    for (std::size_t k = m - 1; k-- > 0;) {
        // poly = poly * (t - x_k) + c_k
        std::vector<std::uint64_t> np(poly.size() + 1, 0);
        std::uint64_t negx = (p - xs[k] % p) % p;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            np[i + 1] = (np[i + 1] + poly[i]) % p;
            np[i] = (np[i] + modp::mul(poly[i], negx, p)) % p;
        }
        np[0] = (np[0] + c[k]) % p;
        poly = std::move(np);
    }
    return poly;
}

std::vector<Rational> interpolate_q(const std::vector<Rational>& xs, std::vector<Rational> c) {
    const std::size_t m = xs.size();
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t j = m - 1; j >= k; --j) {
            c[j] = (c[j] - c[j - 1]) / (xs[j] - xs[j - k]);
            if (j == k) break;
        }
    std::vector<Rational> poly{c[m - 1]};
    for (std::size_t k = m - 1; k-- > 0;) {
        std::vector<Rational> np(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            np[i + 1] += poly[i];
            np[i] -= poly[i] * xs[k];
        }
        np[0] += c[k];
        poly = std::move(np);
    }
    return poly;
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(a[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c + 1; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

// Rows scaled by t^(-row minimum); returns the total shift.
int shift_rows(const std::vector<std::vector<LaurentPoly>>& m, std::vector<std::vector<Polynomial>>& out, int& degree_bound) {
    const std::size_t n = m.size();
    int total = 0;
    degree_bound = 0;
    out.assign(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
        bool any = false;
        int lo = 0, hi = 0;
        for (const auto& v : m[i]) {
            if (v.is_zero()) continue;
            lo = any ? std::min(lo, v.min_degree()) : v.min_degree();
            hi = any ? std::max(hi, v.max_degree()) : v.max_degree();
            any = true;
        }
        if (!any) return 0;
        total += lo;
        degree_bound += hi - lo;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c;
            if (!m[i][j].is_zero()) {
                c.assign(m[i][j].max_degree() - lo + 1, Rational(0));
                for (const auto& [e, v] : m[i][j].terms()) c[e - lo] = v;
            }
            out[i][j] = Polynomial(std::move(c));
        }
    }
    return total;
}

bool has_zero_row(const std::vector<std::vector<LaurentPoly>>& m) {
    for (const auto& row : m) {
        bool any = false;
        for (const auto& v : row) any = any || !v.is_zero();
        if (!any) return true;
    }
    return false;
}

}  // namespace

IntPoly det_monomial(const ExponentMatrix& e, Exec exec) {
    const std::size_t n = e.size();
    if (n == 0) return IntPoly({Integer(1)});
    long long D = 0;
    for (const auto& row : e) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
        int mx = 0;
        for (int v : row) {
            if (v < 0) throw std::invalid_argument("det_monomial needs non-negative exponents");
            mx = std::max(mx, v);
        }
        D += mx;
    }
    // Each coefficient is at most n! and, by Hadamard on |t| = 1, at most
    // n^(n/2) in absolute value; the prime product must exceed twice that.
    double fact = 0;
    for (std::size_t i = 2; i <= n; ++i) fact += std::log2(static_cast<double>(i));
    double hadamard = n > 0 ? 0.5 * static_cast<double>(n) * std::log2(static_cast<double>(n)) : 0.0;
    double bits = 2.0 + std::min(fact, hadamard);
    const std::size_t np = static_cast<std::size_t>(std::ceil(bits / 61.0)) + 1;
    const auto& pool = modp::primes(np);
    const std::vector<std::uint64_t> ps(pool.begin(), pool.begin() + np);
    const std::size_t npts = static_cast<std::size_t>(D) + 1;
    std::vector<std::uint64_t> xs(npts);
    for (std::size_t j = 0; j < npts; ++j) xs[j] = j + 1;

    std::vector<std::uint64_t> vals(np * npts);
    const long long total = static_cast<long long>(np * npts);
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long idx = 0; idx < total; ++idx) {
        std::size_t pi = static_cast<std::size_t>(idx) / npts, j = static_cast<std::size_t>(idx) % npts;
        vals[idx] = modp::det_at(e, xs[j], ps[pi]);
    }

    std::vector<std::vector<std::uint64_t>> coeffs(np);
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long pi = 0; pi < static_cast<long long>(np); ++pi) {
        std::vector<std::uint64_t> v(vals.begin() + pi * npts, vals.begin() + (pi + 1) * npts);
        coeffs[pi] = interpolate_modp(xs, std::move(v), ps[pi]);
    }

    std::vector<Integer> acc(npts, Integer(0));
    Integer M = 1;
    for (std::size_t pi = 0; pi < np; ++pi) {
        const std::uint64_t p = ps[pi];
        std::uint64_t minv = modp::inv(mpz_fdiv_ui(M.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < npts; ++i) {
            std::uint64_t a = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
            std::uint64_t v = i < coeffs[pi].size() ? coeffs[pi][i] : 0;
            std::uint64_t h = modp::mul((v + p - a) % p, minv, p);
            if (h != 0) {
                Integer t = M;
                t *= static_cast<unsigned long>(h);
                acc[i] += t;
            }
        }
        M *= static_cast<unsigned long>(p);
    }
    Integer half = M / 2;
    for (auto& a : acc)
        if (a > half) a -= M;
    return IntPoly(std::move(acc));
}

std::vector<std::vector<LaurentPoly>> to_laurent_matrix(const ExponentMatrix& e) {
    std::vector<std::vector<LaurentPoly>> m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int v : e[i]) m[i].push_back(LaurentPoly::monomial(v));
    return m;
}

LaurentPoly det_interpolate(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    if (has_zero_row(m)) return LaurentPoly();
    std::vector<std::vector<Polynomial>> pm;
    int D = 0;
    int shift = shift_rows(m, pm, D);
    std::vector<Rational> xs(D + 1), vs(D + 1);
    for (int j = 0; j <= D; ++j) {
        xs[j] = j + 1;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a[r][c] = pm[r][c].evaluate(xs[j]);
        vs[j] = det_rational(std::move(a));
    }
    return Polynomial(interpolate_q(xs, vs)).to_laurent(shift);
}

LaurentPoly det_bareiss(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    if (has_zero_row(m)) return LaurentPoly();
    std::vector<std::vector<Polynomial>> a;
    int D = 0;
    int shift = shift_rows(m, a, D);
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return LaurentPoly();
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                Polynomial q, r;
                Polynomial::divmod(num, prev, q, r);
                if (!r.is_zero()) throw std::logic_error("Bareiss step left a remainder");
                a[i][j] = std::move(q);
            }
            a[i][k] = Polynomial();
        }
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d.to_laurent(shift);
}

}  // namespace partcat
