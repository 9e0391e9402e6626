#ifndef HYP_FP_HPP
#define HYP_FP_HPP

#include <cassert>
#include <cstdint>
#include <memory>
#include <vector>

#include "hyp/numbers.hpp"

namespace hyp {

// Prime field F_l with word-sized l. A default-constructed element is a
// modulus-less zero that adopts the modulus of the other operand.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 = unattached zero

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  static Fp from_int(const Int& n, std::uint64_t prime) {
    Int m = n % Int((unsigned long)prime);
    if (m < 0) m += Int((unsigned long)prime);
    return Fp(m.get_ui(), prime);
  }
  static Fp from_rat(const Rat& a, std::uint64_t prime) {
    Fp den = from_int(denom(a), prime);
    if (den.v == 0) throw BadPrime("denominator vanishes mod l");
    return from_int(numer(a), prime) * den.inv();
  }

  std::uint64_t modulus(const Fp& o) const { return p ? p : o.p; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = a.modulus(b);
    if (!m) return Fp();
    std::uint64_t s = a.v + b.v;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = a.modulus(b);
    if (!m) return Fp();
    std::uint64_t s = a.v + m - b.v;
    if (s >= m) s -= m;
    return Fp(s, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = a.modulus(b);
    if (!m) return Fp();
    return Fp((std::uint64_t)((__uint128_t)a.v * b.v % m), m);
  }
  Fp operator-() const { return p ? Fp(v ? p - v : 0, p) : Fp(); }
  Fp pow(std::uint64_t e) const {
    assert(p);
    Fp r(1, p), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw BadPrime("Fp division by zero");
    return pow(p - 2);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_one(const Fp& a) { return a.v == 1; }
inline Fp kinv(const Fp& a) { return a.inv(); }
inline Fp kfrom_int(const Fp& like, long n) {
  assert(like.p);
  return Fp::from_int(Int(n), like.p);
}

// All n-th roots of a in F_l by exhaustive scan. l stays word-small
// (the c-sweep enumerates every residue anyway), so O(l) is acceptable.
inline std::vector<Fp> nth_roots(const Fp& a, std::uint64_t n) {
  std::vector<Fp> out;
  if (a.v == 0) {
    out.emplace_back(0, a.p);
    return out;
  }
  for (std::uint64_t s = 1; s < a.p; ++s)
    if (Fp(s, a.p).pow(n) == a) out.emplace_back(s, a.p);
  return out;
}

// Residue ring Z/l^n with a shared big modulus.
struct Zl {
  Int v;
  std::shared_ptr<const Int> m;  // null = unattached zero

  Zl() = default;
  Zl(Int value, std::shared_ptr<const Int> mod) : v(std::move(value)), m(std::move(mod)) {
    normalize();
  }
  static std::shared_ptr<const Int> make_modulus(const Int& m) {
    return std::make_shared<const Int>(m);
  }
  static Zl from_rat(const Rat& a, const std::shared_ptr<const Int>& mod) {
    Zl d(denom(a), mod);
    Int di;
    if (mpz_invert(di.get_mpz_t(), d.v.get_mpz_t(), mod->get_mpz_t()) == 0)
      throw BadPrime("denominator not a unit mod l^n");
    return Zl(numer(a) * di, mod);
  }

  void normalize() {
    if (!m) return;
    v %= *m;
    if (v < 0) v += *m;
  }
  const std::shared_ptr<const Int>& modulus(const Zl& o) const { return m ? m : o.m; }

  friend Zl operator+(const Zl& a, const Zl& b) {
    auto mod = a.modulus(b);
    if (!mod) return Zl();
    return Zl(a.v + b.v, mod);
  }
  friend Zl operator-(const Zl& a, const Zl& b) {
    auto mod = a.modulus(b);
    if (!mod) return Zl();
    return Zl(a.v - b.v, mod);
  }
  friend Zl operator*(const Zl& a, const Zl& b) {
    auto mod = a.modulus(b);
    if (!mod) return Zl();
    return Zl(a.v * b.v, mod);
  }
  Zl operator-() const { return m ? Zl(-v, m) : Zl(); }
  Zl inv() const {
    if (!m) throw std::domain_error("Zl division by zero");
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m->get_mpz_t()) == 0)
      throw BadPrime("non-unit inverse in Z/l^n");
    return Zl(r, m);
  }
  friend Zl operator/(const Zl& a, const Zl& b) { return a * b.inv(); }
  friend bool operator==(const Zl& a, const Zl& b) { return a.v == b.v; }
  friend bool operator!=(const Zl& a, const Zl& b) { return a.v != b.v; }

  Zl& operator+=(const Zl& o) { return *this = *this + o; }
  Zl& operator-=(const Zl& o) { return *this = *this - o; }
  Zl& operator*=(const Zl& o) { return *this = *this * o; }
};

inline bool is_zero(const Zl& a) { return a.v == 0; }
inline bool is_one(const Zl& a) { return a.v == 1; }
inline Zl kinv(const Zl& a) { return a.inv(); }
inline Zl kfrom_int(const Zl& like, long n) {
  assert(like.m);
  return Zl(Int(n), like.m);
}

}  // namespace hyp

#endif
