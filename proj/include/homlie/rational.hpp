#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace homlie {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : m_value(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : m_value(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or q = 0.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return m_value.get_num(); }
  mpz_class denominator() const { return m_value.get_den(); }
  const mpq_class& raw() const { return m_value; }

  bool is_zero() const { return sgn(m_value) == 0; }
  int sign() const { return sgn(m_value); }
  bool is_integer() const { return m_value.get_den() == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-m_value)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.m_value == b.m_value; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.m_value, b.m_value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class m_value{0};
};

Rational conj(const Rational& r);
Rational inverse(const Rational& r);

/// Element re + i·im of Q(i). Used for complexified computations.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : m_re(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : m_re(re) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : m_re(re) {}                   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : m_re(std::move(re)), m_im(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return m_re; }
  const Rational& im() const { return m_im; }
  bool is_zero() const { return m_re.is_zero() && m_im.is_zero(); }
  bool is_real() const { return m_im.is_zero(); }

  /// |z|^2 as a rational.
  Rational norm() const { return m_re * m_re + m_im * m_im; }

  /// "re", "im*i", "re+im*i" with rational parts.
  std::string str() const;

  GaussianRational operator-() const { return {-m_re, -m_im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

private:
  Rational m_re;
  Rational m_im;
};

GaussianRational conj(const GaussianRational& z);
GaussianRational inverse(const GaussianRational& z);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const GaussianRational& z) { return z.str(); }

}  // namespace homlie
