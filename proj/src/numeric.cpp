#include "ordsmith/numeric.hpp"

#include <algorithm>

namespace ordsmith {

int valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    Int a = abs(n);
    int v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

Int pow_int(const Int& p, unsigned long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

Int isqrt(const Int& n, bool* exact) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Int s, r;
    mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    if (exact) *exact = (r == 0);
    return s;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<std::pair<Int, int>> factor(const Int& n) {
    std::vector<std::pair<Int, int>> out;
    Int a = abs(n);
    if (a <= 1) return out;
    Int d = 2;
    while (d * d <= a) {
        if (a % d == 0) {
            int e = 0;
            while (a % d == 0) {
                a /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (a > 1) out.emplace_back(a, 1);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int hilbert_symbol(const Int& a0, const Int& b0, const Int& p) {
    if (a0 == 0 || b0 == 0) throw std::domain_error("hilbert symbol of zero");
    int alpha = valuation(a0, p), beta = valuation(b0, p);
    Int u = a0 / pow_int(p, alpha), v = b0 / pow_int(p, beta);
    int al = alpha & 1, be = beta & 1;
    if (p == 2) {
        auto eps = [](const Int& x) { return (int)mpz_class((x - 1) / 2 % 2).get_si() & 1; };
        auto omega = [](const Int& x) { return (int)mpz_class((x * x - 1) / 8 % 2).get_si() & 1; };
        int e = (eps(u) * eps(v) + al * omega(v) + be * omega(u)) & 1;
        return e ? -1 : 1;
    }
    int s = 1;
    if (al && be && ((p - 1) / 2) % 2 == 1) s = -s;
    if (be) s *= kronecker(u, p);
    if (al) s *= kronecker(v, p);
    return s;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod m");
    return r;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_sym(const Int& a, const Int& m) {
    Int r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    Int t = mod_pos((r2 - r1) * inv_mod(m1 % m2, m2), m2);
    return r1 + m1 * t;
}

Int sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod_pos(a0, p);
    if (a == 0) return 0;
    if (kronecker(a, p) != 1) throw std::domain_error("not a quadratic residue");
    auto powm = [&](Int b, Int e) {
        Int r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    if (mod_pos(p, 4) == 3) return powm(a, (p + 1) / 4);
    // Tonelli-Shanks
    Int q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int m = s, c = powm(z, q), t = powm(a, q), r = powm(a, (q + 1) / 2);
    while (t != 1) {
        Int tt = t;
        int i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

bool is_squarefree(const Int& n) {
    for (auto& [p, e] : factor(n))
        if (e > 1) return false;
    return n != 0;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

}  // namespace ordsmith
