#include "homlie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace homlie {

namespace {

bool is_signed_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  m_value = mpq_class(numerator, denominator);
  m_value.canonicalize();
}

Rational::Rational(const mpq_class& value) : m_value(value) {
  if (m_value.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  m_value.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_signed_integer(num)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_signed_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const {
  if (is_integer()) return m_value.get_num().get_str();
  return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  m_value += o.m_value;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  m_value -= o.m_value;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  m_value *= o.m_value;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  m_value /= o.m_value;
  return *this;
}

Rational conj(const Rational& r) { return r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

std::string GaussianRational::str() const {
  if (m_im.is_zero()) return m_re.str();
  const std::string im = m_im.str() + "*i";
  if (m_re.is_zero()) return im;
  return m_re.str() + (m_im.sign() > 0 ? "+" : "") + im;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  m_re += o.m_re;
  m_im += o.m_im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  m_re -= o.m_re;
  m_im -= o.m_im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = m_re * o.m_re - m_im * o.m_im;
  Rational im = m_re * o.m_im + m_im * o.m_re;
  m_re = std::move(re);
  m_im = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  *this *= conj(o);
  m_re /= n;
  m_im /= n;
  return *this;
}

GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

GaussianRational inverse(const GaussianRational& z) { return GaussianRational(1) / z; }

}  // namespace homlie
