#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordsmith {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation of a nonzero integer; throws on zero.
int valuation(const Int& n, const Int& p);

// Largest e with p^e <= n-ish convenience: p^k as Int.
Int pow_int(const Int& p, unsigned long k);

// Floor square root; exact flag reports whether n is a perfect square.
Int isqrt(const Int& n, bool* exact = nullptr);

bool is_square(const Int& n);

// Trial-division factorization, adequate for the magnitudes this library
// meets (discriminants, multipliers, matrix scales).
std::vector<std::pair<Int, int>> factor(const Int& n);

bool is_prime(const Int& n);

// Kronecker symbol (a|n).
int kronecker(const Int& a, const Int& n);

// Hilbert symbol (a,b)_p over Q_p (p = 2 handled); p must be prime.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);

// Modular inverse; throws std::domain_error when gcd(a,m) != 1.
Int inv_mod(const Int& a, const Int& m);

// Representative of a mod m in [0, m).
Int mod_pos(const Int& a, const Int& m);

// Balanced representative in (-m/2, m/2].
Int mod_sym(const Int& a, const Int& m);

// x with x = r1 mod m1, x = r2 mod m2 for coprime moduli.
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Square root mod an odd prime (Tonelli-Shanks); throws when a is a
// non-residue.
Int sqrt_mod_prime(const Int& a, const Int& p);

bool is_squarefree(const Int& n);

// Primes dividing n, ascending.
std::vector<Int> prime_divisors(const Int& n);

}  // namespace ordsmith
