#ifndef MOTIVIC_LAURENT_HPP
#define MOTIVIC_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace motivic {

/// Element of Z[L, L^-1], the ring where every motivic class in this
/// library lives. Terms map exponents (possibly negative) to exact
/// integer coefficients; zero coefficients are never stored, so equal
/// values always have identical term maps.
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0, 1); }
  static Laurent lefschetz() { return monomial(1, 1); }
  static Laurent monomial(long exponent, mpz_class coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// True when every stored coefficient is >= 0.
  bool has_nonnegative_coefficients() const;
  /// True when no exponent is negative (a genuine polynomial in L).
  bool has_nonnegative_exponents() const;

  long min_exponent() const;  // requires !is_zero()
  long max_exponent() const;  // requires !is_zero()
  mpz_class coefficient(long exponent) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  Laurent scale(const mpz_class& c) const;
  Laurent shifted(long exponent_delta) const;
  Laurent pow(unsigned long e) const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  /// Exact evaluation at L = v. Throws ZeroDenominator when v = 0 and a
  /// negative exponent is present.
  mpq_class evaluate(const mpq_class& v) const;

  /// Terms as (exponent, coefficient) pairs sorted by ascending exponent.
  std::vector<std::pair<long, mpz_class>> sorted_terms() const;

  /// "\mathbb{L}^{3}+\mathbb{L}" style, descending exponents.
  std::string to_latex() const;
  /// Plain text, e.g. "L^3+L-2", descending exponents.
  std::string to_string() const;

 private:
  void prune(long exponent);
  std::map<long, mpz_class> terms_;
};

inline Laurent operator*(const mpz_class& c, const Laurent& p) { return p.scale(c); }

}  // namespace motivic

#endif  // MOTIVIC_LAURENT_HPP
