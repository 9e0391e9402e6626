#ifndef HYP_NUMBERS_HPP
#define HYP_NUMBERS_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyp {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a denominator vanishes under reduction mod l, or a needed
// root does not exist in the residue field. Callers retry with another prime.
struct BadPrime : std::runtime_error {
  explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the implemented scope (algebraic expansion point,
// irrational exponents where rational ones are required, ...).
struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline Rat kinv(const Rat& a) {
  if (sgn(a) == 0) throw std::domain_error("division by zero rational");
  return 1 / a;
}
inline Rat kfrom_int(const Rat&, long n) { return Rat(n); }

inline const Int& numer(const Rat& a) { return a.get_num(); }
inline const Int& denom(const Rat& a) { return a.get_den(); }

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Int floor_int(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

inline Rat rat_abs(const Rat& a) { return sgn(a) < 0 ? Rat(-a) : a; }

inline Rat rat_pow(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  Rat base = e < 0 ? kinv(a) : a;
  unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), n);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), n);
  r.canonicalize();
  return r;
}

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& a) {
  if (sgn(a) < 0) return std::nullopt;
  if (sgn(a) == 0) return Rat(0);
  if (!mpz_perfect_square_p(a.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(a.get_den().get_mpz_t()))
    return std::nullopt;
  Rat r;
  mpz_sqrt(r.get_num().get_mpz_t(), a.get_num().get_mpz_t());
  mpz_sqrt(r.get_den().get_mpz_t(), a.get_den().get_mpz_t());
  return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

// Wang-style rational number reconstruction: find p/q with |p|, q <= sqrt(m/2),
// q*r = p mod m, gcd(q, m) = 1; nullopt if no such pair exists.
inline std::optional<Rat> ratnum_reconstruct(const Int& r, const Int& m) {
  if (m < 2) return std::nullopt;
  Int bound2 = m / 2;  // accept |p|, q with p^2, q^2 <= m/2
  Int r0 = m, r1 = ((r % m) + m) % m;
  Int t0 = 0, t1 = 1;
  while (r1 * r1 > bound2) {
    if (r1 == 0) return std::nullopt;
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int p = r1, q = t1;
  if (q < 0) { q = -q; p = -p; }
  if (q * q > bound2) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1 && !(p == 0 && q == 1)) {
    if (p == 0) { q = 1; }
    else return std::nullopt;
  }
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace hyp

#endif
