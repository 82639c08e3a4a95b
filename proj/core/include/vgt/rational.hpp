#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "vgt/errors.hpp"

namespace vgt {

// Arbitrary-precision signed integer, value semantics over mpz_t.
class Int {
 public:
  Int() { mpz_init(z_); }
  Int(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit Int(const std::string& decimal);
  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a) {
    Int r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  Int& operator+=(const Int& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend auto operator<=>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <=> 0; }

  int sgn() const { return mpz_sgn(z_); }
  bool odd() const { return mpz_odd_p(z_) != 0; }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const;
  // number of digits in the given base; may overestimate by one for base != 2
  size_t size_in_base(int base) const { return mpz_sizeinbase(z_, base); }
  std::string str() const;

  static Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }
  static Int ten_pow(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.z_, 10, e);
    return r;
  }
  static Int two_pow(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.z_, 2, e);
    return r;
  }
  static Int mul_2exp(const Int& a, unsigned long s) {
    Int r;
    mpz_mul_2exp(r.z_, a.z_, s);
    return r;
  }
  // floor(a / b) with remainder, b > 0
  static void fdiv_qr(Int& q, Int& r, const Int& a, const Int& b) {
    mpz_fdiv_qr(q.z_, r.z_, a.z_, b.z_);
  }
  static Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.z_, a.z_, b.z_);
    return q;
  }
  static Int cdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.z_, a.z_, b.z_);
    return q;
  }
  // floor(a^(1/r)); second member true when the root is exact
  static std::pair<Int, bool> root(const Int& a, unsigned long r) {
    Int out;
    bool exact = mpz_root(out.z_, a.z_, r) != 0;
    return {std::move(out), exact};
  }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

// Exact rational number. Always canonical: positive denominator, numerator
// and denominator coprime. Arithmetic never rounds.
class Rat {
 public:
  Rat() { mpq_init(q_); }
  Rat(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rat(long num, long den);
  Rat(const Int& num, const Int& den);
  explicit Rat(const Int& num) {
    mpq_init(q_);
    mpq_set_z(q_, num.raw());
  }
  // accepts "p", "-p", "p/q"
  explicit Rat(const std::string& s);
  Rat(const Rat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  Int num() const {
    Int n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Int den() const {
    Int d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) {
    Rat r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  Rat& operator+=(const Rat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend auto operator<=>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <=> 0; }

  int sgn() const { return mpq_sgn(q_); }
  bool is_zero() const { return sgn() == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  Rat abs() const {
    Rat r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rat inverse() const;

  // "p" when the denominator is 1, "p/q" otherwise
  std::string str() const;

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

// Exact x^e. A negative exponent requires x != 0 (domain_error otherwise);
// x^0 = 1 for every x including 0.
Rat rat_pow(const Rat& x, long e);

std::ostream& operator<<(std::ostream& os, const Int& v);
std::ostream& operator<<(std::ostream& os, const Rat& v);

}  // namespace vgt
