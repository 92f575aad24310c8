#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/error.hpp"

namespace artin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in x and y with integer coefficients.
///
/// Terms are keyed by (exponent of x, exponent of y) and never store a zero
/// coefficient, so structural equality is polynomial equality.
class LaurentPoly2 {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, BigInt>;

  LaurentPoly2() = default;
  LaurentPoly2(long long c) {  // NOLINT: integers are constants
    if (c != 0) terms_.emplace(Exponents{0, 0}, BigInt(c));
  }

  static LaurentPoly2 monomial(int x_exp, int y_exp, BigInt c = 1) {
    LaurentPoly2 p;
    if (c != 0) p.terms_.emplace(Exponents{x_exp, y_exp}, std::move(c));
    return p;
  }
  static LaurentPoly2 x(int e = 1) { return monomial(e, 0); }
  static LaurentPoly2 y(int e = 1) { return monomial(0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(int x_exp, int y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  // Every exponent >= 0: the polynomial lies in Z[x, y].
  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      if (e.first < 0 || e.second < 0) return false;
    return true;
  }

  bool depends_on_x() const {
    for (const auto& [e, c] : terms_)
      if (e.first != 0) return true;
    return false;
  }

  // Degree in y; meaningful for nonzero polynomials.
  int y_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e.second > d) d = e.second;
      first = false;
    }
    return d;
  }

  /// Substitute x = 0 (only the x-free terms survive). Requires no negative
  /// powers of x.
  LaurentPoly2 at_x_zero() const {
    LaurentPoly2 out;
    for (const auto& [e, c] : terms_) {
      if (e.first < 0) throw DomainError("cannot set x = 0 in a term with a negative power of x");
      if (e.first == 0) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Exact value at x = 0, y = y0 (y0 must be nonzero if y has negative powers).
  Rational evaluate_at_x_zero(const Rational& y0) const {
    Rational total = 0;
    for (const auto& [e, c] : at_x_zero().terms_) {
      Rational term = Rational(c);
      if (e.second >= 0) {
        for (int i = 0; i < e.second; ++i) term *= y0;
      } else {
        for (int i = 0; i < -e.second; ++i) term /= y0;
      }
      total += term;
    }
    return total;
  }

  /// Canonical text: terms by increasing (x exponent, y exponent), e.g.
  /// "x^1*y^2 - x^1*y^3"; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono;
      if (e.first != 0) mono += "x^" + std::to_string(e.first);
      if (e.second != 0) mono += (mono.empty() ? "" : "*") + std::string("y^") + std::to_string(e.second);
      if (mono.empty())
        out += magnitude.str();
      else if (magnitude == 1)
        out += mono;
      else
        out += magnitude.str() + "*" + mono;
    }
    return out;
  }

  /// Inverse of to_string.
  static LaurentPoly2 parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    LaurentPoly2 out;
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) {
      std::size_t start = i;
      if (allow_sign && i < s.size() && s[i] == '-') ++i;
      std::size_t digits = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == digits) throw ParseError("expected a number in polynomial '" + std::string(text) + "'");
      return s.substr(start, i - start);
    };
    while (i < s.size()) {
      bool negative = false;
      if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
      } else if (i != 0) {
        throw ParseError("expected + or - in polynomial '" + std::string(text) + "'");
      }
      BigInt coeff = 1;
      int ex = 0;
      int ey = 0;
      bool have_factor = false;
      while (i < s.size() && s[i] != '+' && s[i] != '-') {
        if (have_factor) {
          if (s[i] != '*') throw ParseError("expected * in polynomial '" + std::string(text) + "'");
          ++i;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          coeff *= BigInt(read_int(false));
        } else if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
          const char var = s[i++];
          int e = 1;
          if (i < s.size() && s[i] == '^') {
            ++i;
            e = std::stoi(read_int(true));
          }
          (var == 'x' ? ex : ey) += e;
        } else {
          throw ParseError("unexpected character in polynomial '" + std::string(text) + "'");
        }
        have_factor = true;
      }
      if (!have_factor) throw ParseError("dangling sign in polynomial '" + std::string(text) + "'");
      out += monomial(ex, ey, negative ? BigInt(-coeff) : coeff);
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace artin
