#include "adomian/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lexer.hpp"

namespace adomian {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> ParseError { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  const std::string body = s.substr(i);
  if (body.empty()) throw bad();

  Rational q;
  const auto slash = body.find('/');
  if (slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    auto all_digits = [](const std::string& d) {
      return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    q = Rational(n, d);
    q.canonicalize();
  } else {
    // Decimal with optional fraction and exponent, converted exactly.
    std::size_t j = 0;
    std::string digits;
    long scale = 0;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) digits += body[j++];
    if (j < body.size() && body[j] == '.') {
      ++j;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
        digits += body[j++];
        --scale;
      }
    }
    if (digits.empty()) throw bad();
    if (j < body.size() && (body[j] == 'e' || body[j] == 'E')) {
      ++j;
      std::string ex = body.substr(j);
      if (ex.empty()) throw bad();
      std::size_t used = 0;
      long e = 0;
      try {
        e = std::stol(ex, &used);
      } catch (const std::exception&) {
        throw bad();
      }
      if (used != ex.size()) throw bad();
      scale += e;
      j = body.size();
    }
    if (j != body.size()) throw bad();
    mpz_class n(digits, 10), p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    q = scale >= 0 ? Rational(n * p) : Rational(n, p);
    q.canonicalize();
  }
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value has no rational form");
  return Rational(value);
}

FloatPoint to_float(const ExactPoint& p) {
  FloatPoint out;
  for (Var v : kAllVars)
    if (p.has(v)) out.set(v, p.get(v)->get_d());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_order(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first > b.first; }

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) {
    terms_.emplace_back(Monomial{}, constant);
    terms_.back().second.canonicalize();
  }
}

Polynomial Polynomial::variable(Var v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(Monomial m, const Rational& coeff) {
  Polynomial p;
  if (coeff != 0) {
    p.terms_.emplace_back(m, coeff);
    p.terms_.back().second.canonicalize();
  }
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  for (auto& term : terms) term.second.canonicalize();
  Polynomial p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == term.first)
      p.terms_.back().second += term.second;
    else
      p.terms_.push_back(std::move(term));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_order);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator-(Polynomial a) {
  for (auto& term : a.terms_) term.second = -term.second;
  return a;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= rhs;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;

  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      prod = qa * qb;
      auto [it, inserted] = acc.try_emplace((ma * mb).key(), prod);
      if (!inserted) it->second += prod;
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [key, q] : acc) {
    if (q == 0) continue;
    p.terms_.emplace_back(Monomial::from_key(key), std::move(q));
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_order);
  return p;
}

Polynomial diff(const Polynomial& p, Var v, unsigned times) {
  if (times == 0) return p;
  std::vector<Polynomial::Term> out;
  for (const auto& [m, q] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e < times) continue;
    Rational factor = 1;
    for (unsigned k = 0; k < times; ++k) factor *= e - k;
    out.emplace_back(m.with_exponent(v, e - times), q * factor);
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial antideriv(const Polynomial& p, Var v, const Rational& lower) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size() + 1);
  for (const auto& [m, q] : p.terms()) {
    const unsigned e = m.exponent(v) + 1;
    out.emplace_back(m.with_exponent(v, e), q / e);
  }
  Polynomial upper = Polynomial::from_terms(std::move(out));
  if (lower == 0) return upper;
  return upper - partial_eval(upper, ExactPoint{{v, lower}});
}

namespace {

template <class T>
T power(const T& base, unsigned e) {
  T result = 1;
  T b = base;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace

Rational eval(const Polynomial& p, const ExactPoint& point) {
  std::array<std::vector<Rational>, kVarCount> powers;
  for (Var v : kAllVars) {
    const unsigned d = p.degree(v);
    if (d == 0) continue;
    const Rational& value = point.at(v);
    auto& table = powers[index(v)];
    table.reserve(d + 1);
    table.emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) table.push_back(table.back() * value);
  }
  Rational sum = 0, term;
  for (const auto& [m, q] : p.terms()) {
    term = q;
    for (Var v : kAllVars)
      if (unsigned e = m.exponent(v)) term *= powers[index(v)][e];
    sum += term;
  }
  return sum;
}

double eval(const Polynomial& p, const FloatPoint& point) {
  std::array<std::vector<double>, kVarCount> powers;
  for (Var v : kAllVars) {
    const unsigned d = p.degree(v);
    if (d == 0) continue;
    const double value = point.at(v);
    auto& table = powers[index(v)];
    table.reserve(d + 1);
    table.push_back(1.0);
    for (unsigned k = 1; k <= d; ++k) table.push_back(table.back() * value);
  }
  double sum = 0.0;
  for (const auto& [m, q] : p.terms()) {
    double term = q.get_d();
    for (Var v : kAllVars)
      if (unsigned e = m.exponent(v)) term *= powers[index(v)][e];
    sum += term;
  }
  return sum;
}

Polynomial partial_eval(const Polynomial& p, const ExactPoint& point) {
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& [m, q] : p.terms()) {
    Monomial rest = m;
    Rational coeff = q;
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e == 0 || !point.has(v)) continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point.get(v)->get_num_mpz_t(), e);
      mpz_pow_ui(f.get_den_mpz_t(), point.get(v)->get_den_mpz_t(), e);
      coeff *= f;
      rest = rest.with_exponent(v, 0);
    }
    out.emplace_back(rest, std::move(coeff));
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial substitute(const Polynomial& p, Var v, const Polynomial& q) {
  const unsigned d = p.degree(v);
  if (d == 0) return p;
  std::vector<Polynomial> qpow{Polynomial(1)};
  for (unsigned k = 1; k <= d; ++k) qpow.push_back(qpow.back() * q);
  Polynomial out;
  std::vector<Polynomial::Term> free_terms;
  for (const auto& [m, coeff] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) {
      free_terms.emplace_back(m, coeff);
      continue;
    }
    out += Polynomial::monomial(m.with_exponent(v, 0), coeff) * qpow[e];
  }
  return out + Polynomial::from_terms(std::move(free_terms));
}

Polynomial pow(const Polynomial& p, unsigned n) { return power(p, n); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, q] : p.terms()) {
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (m.is_one() || mag != 1) body = to_string(mag);
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Parser

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

class PolyParser {
 public:
  explicit PolyParser(std::string_view src) : lex_(src) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (lex_.peek().kind != Tok::end) lex_.fail("unexpected '" + lex_.peek().text + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    if (lex_.accept(Tok::minus)) neg = true;
    else lex_.accept(Tok::plus);
    acc = neg ? -term() : term();
    for (;;) {
      if (lex_.accept(Tok::plus)) acc += term();
      else if (lex_.accept(Tok::minus)) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.accept(Tok::star)) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lex_.accept(Tok::caret)) {
      const long e = lex_.signed_integer();
      if (e < 0) lex_.fail("negative exponent in polynomial");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    const Token& tok = lex_.peek();
    switch (tok.kind) {
      case Tok::number: return Polynomial(parse_rational(lex_.take().text));
      case Tok::ident: {
        const auto v = parse_var(tok.text);
        if (!v) lex_.fail("unknown variable '" + tok.text + "' (allowed: t, x, c, eps)");
        lex_.take();
        return Polynomial::variable(*v);
      }
      case Tok::lparen: {
        lex_.take();
        Polynomial inner = expr();
        lex_.expect(Tok::rparen, "')'");
        return inner;
      }
      default: lex_.fail("expected a number, variable or '('");
    }
  }

  Lexer lex_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace adomian
