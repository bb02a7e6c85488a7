#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latt {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" or a bare integer. Throws on malformed input or q = 0.
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

inline Rat rat(long num, long den = 1) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline Rat ratq(const Int& num, const Int& den) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

inline Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }
inline Int rat_ceil(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

// x^k for k >= 0.
Int int_pow(const Int& x, unsigned long k);
Rat rat_pow(const Rat& x, unsigned long k);

// Largest s with s^2 <= x (x >= 0).
Int isqrt(const Int& x);

// Exact square root if x is a perfect square of a rational.
std::optional<Rat> rat_sqrt_exact(const Rat& x);

// Squarefree part of a positive rational: the unique squarefree positive
// integer s with x = s * y^2 for rational y.
Int squarefree_part(const Rat& x);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

long ilog(const Int& x, const Int& base);      // largest e with base^e <= x
long valuation(Int x, const Int& p);           // p-adic valuation, x != 0

bool is_prime(const Int& n);
std::vector<std::pair<Int, int>> factor(Int n);  // n > 0

// Legendre symbol (a|p) for odd prime p.
int legendre(const Int& a, const Int& p);
// Kronecker symbol (a|n).
int kronecker(const Int& a, const Int& n);

// Bernoulli number B_k (B_1 = -1/2).
Rat bernoulli(unsigned k);

// Generalized Bernoulli number B_{k,chi} for the quadratic character chi of
// fundamental discriminant d0.
Rat bernoulli_chi(unsigned k, const Int& d0);

// Fundamental discriminant of Q(sqrt(d)), d a nonzero integer. For square d
// returns 1.
Int fundamental_discriminant(const Int& d);

}  // namespace latt
