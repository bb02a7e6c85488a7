#include "latt14/rational.hpp"

#include <map>

namespace latt {

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) throw std::invalid_argument("rat_parse: empty token");
  Rat x;
  if (x.set_str(t, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (x.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}
std::string int_str(const Int& x) { return x.get_str(); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int int_pow(const Int& x, unsigned long k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Rat rat_pow(const Rat& x, unsigned long k) {
  return Rat(int_pow(x.get_num(), k), int_pow(x.get_den(), k));
}

Int isqrt(const Int& x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Rat> rat_sqrt_exact(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int sn = isqrt(x.get_num()), sd = isqrt(x.get_den());
  if (sn * sn != x.get_num() || sd * sd != x.get_den()) return std::nullopt;
  return Rat(sn, sd);
}

Int squarefree_part(const Rat& x) {
  if (x <= 0) throw std::invalid_argument("squarefree_part: nonpositive");
  Int n = x.get_num() * x.get_den();  // same square class as x
  Int s = 1;
  for (auto& [p, e] : factor(n))
    if (e % 2) s *= p;
  return s;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long ilog(const Int& x, const Int& base) {
  if (x < 1 || base < 2) throw std::invalid_argument("ilog");
  long e = 0;
  Int v = base;
  while (v <= x) {
    v *= base;
    ++e;
  }
  return e;
}

long valuation(Int x, const Int& p) {
  if (x == 0) throw std::invalid_argument("valuation of 0");
  long v = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    x = q;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<std::pair<Int, int>> factor(Int n) {
  if (n <= 0) throw std::invalid_argument("factor: need positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n;) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    p += (p == 2) ? 1 : 2;
    // quadratic sieve territory is out of reach of trial division; the
    // inputs here (determinants, masses) stay far below that
    if (p > 100000000 && n > 1 && is_prime(n)) break;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Rat bernoulli(unsigned k) {
  static std::vector<Rat> cache;  // cache[k] = B_k
  if (k < cache.size()) return cache[k];
  // B_m via the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0, B_0 = 1
  if (cache.empty()) cache.push_back(Rat(1));
  for (unsigned m = cache.size(); m <= k; ++m) {
    Rat s(0);
    Int binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += Rat(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-s / Rat(Int(m + 1)));
  }
  return cache[k];
}

// Bernoulli polynomial value B_k(x), exact.
static Rat bernoulli_poly(unsigned k, const Rat& x) {
  Rat s(0);
  Int binom = 1;  // C(k, j)
  Rat xpow(1);
  // B_k(x) = sum_j C(k,j) B_{k-j} x^j
  std::vector<Rat> xs(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    xs[j] = xpow;
    xpow *= x;
  }
  for (unsigned j = 0; j <= k; ++j) {
    s += Rat(binom) * bernoulli(k - j) * xs[j];
    binom = binom * (k - j) / (j + 1);
  }
  return s;
}

Rat bernoulli_chi(unsigned k, const Int& d0) {
  if (d0 == 1) return bernoulli(k);
  Int f = abs(d0);
  Rat s(0);
  for (Int a = 1; a <= f; ++a) {
    int chi = kronecker(d0, a);
    if (chi == 0) continue;
    s += Rat(chi) * bernoulli_poly(k, Rat(a, f));
  }
  return rat_pow(Rat(f), k - 1) * s;
}

Int fundamental_discriminant(const Int& d) {
  if (d == 0) throw std::invalid_argument("fundamental_discriminant: zero");
  Int s = 1;
  Int n = abs(d);
  for (auto& [p, e] : factor(n))
    if (e % 2) s *= p;
  if (d < 0) s = -s;
  // s is the squarefree kernel with the sign of d
  if (s == 1) return Int(1);
  Int m = s % 4;
  if (m < 0) m += 4;
  return (m == 1) ? s : 4 * s;
}

}  // namespace latt
