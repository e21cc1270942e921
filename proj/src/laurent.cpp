#include "motivic/laurent.hpp"

#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

Laurent Laurent::monomial(long exponent, mpz_class coefficient) {
  Laurent p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool Laurent::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Laurent::has_nonnegative_exponents() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

long Laurent::min_exponent() const { return terms_.begin()->first; }
long Laurent::max_exponent() const { return terms_.rbegin()->first; }

mpz_class Laurent::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::prune(long exponent) {
  auto it = terms_.find(exponent);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] -= c;
    prune(e);
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      r.terms_[e1 + e2] += c1 * c2;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::scale(const mpz_class& c) const {
  Laurent r;
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_.emplace(e, c * cc);
  return r;
}

Laurent Laurent::shifted(long exponent_delta) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + exponent_delta, c);
  return r;
}

Laurent Laurent::pow(unsigned long e) const {
  Laurent r = one();
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

mpq_class Laurent::evaluate(const mpq_class& v) const {
  if (!terms_.empty() && min_exponent() < 0 && v == 0)
    fail(ErrorCode::ZeroDenominator, "evaluation at 0 with negative exponents");
  mpq_class acc = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class base = v;
    while (a > 0) {
      if (a & 1) p *= base;
      base *= base;
      a >>= 1;
    }
    if (e < 0) p = 1 / p;
    acc += mpq_class(c) * p;
  }
  acc.canonicalize();
  return acc;
}

std::vector<std::pair<long, mpz_class>> Laurent::sorted_terms() const {
  return {terms_.begin(), terms_.end()};
}

namespace {

std::string render(const std::map<long, mpz_class>& terms, const std::string& var,
                   bool braced_exponent) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const long e = it->first;
    mpz_class c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? "-" : "+");
    }
    first = false;
    const bool unit_coef = (c == 1);
    if (e == 0) {
      out << c.get_str();
    } else {
      if (!unit_coef) out << c.get_str();
      out << var;
      if (e != 1) {
        if (braced_exponent)
          out << "^{" << e << "}";
        else
          out << "^" << e;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string Laurent::to_latex() const { return render(terms_, "\\mathbb{L}", true); }

std::string Laurent::to_string() const { return render(terms_, "L", false); }

}  // namespace motivic
