#include "supercontact/expr.hpp"

#include <cctype>
#include <vector>

namespace supercontact {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Dims& dims) : src_(src), dims_(dims) {}

  Superfunction parse() {
    Superfunction f = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return f;
  }

 private:
  std::string_view src_;
  Dims dims_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Superfunction expr() {
    Superfunction f = term();
    for (;;) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }

  Superfunction term() {
    Superfunction f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  Superfunction unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Superfunction power() {
    Superfunction base = primary();
    while (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::string e = digits();
      if (e.empty()) throw ParseError("exponent must be a nonnegative integer literal", at);
      if (e.size() > 6) throw ParseError("exponent too large", at);
      const int k = std::stoi(e);
      Superfunction acc = Superfunction::constant(dims_, Rat(1));
      for (int i = 0; i < k && !acc.is_zero(); ++i) acc = acc * base;
      base = std::move(acc);
    }
    return base;
  }

  Superfunction primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Superfunction f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      mpz_class den(1);
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        const std::string d = digits();
        if (d.empty()) throw ParseError("expected denominator", den_at);
        den = mpz_class(d, 10);
        if (den == 0) throw ParseError("zero denominator", den_at);
      }
      Rat r(num, den);
      r.canonicalize();
      return Superfunction::constant(dims_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Superfunction::variable(dims_, variable(src_.substr(at, pos_ - at), at));
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  CoordId variable(std::string_view name, std::size_t at) const {
    auto unknown = [&] { return ParseError("unknown variable '" + std::string(name) + "'", at); };
    if (name == "z") return CoordId::z();
    std::string_view stem;
    std::string_view idx;
    if (name.starts_with("th")) {
      stem = "th";
      idx = name.substr(2);
    } else if (name.starts_with("x") || name.starts_with("y")) {
      stem = name.substr(0, 1);
      idx = name.substr(1);
    } else {
      throw unknown();
    }
    if (idx.empty() || idx.size() > 4 || idx.front() == '0') throw unknown();
    for (char ch : idx)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw unknown();
    const int k = std::stoi(std::string(idx));
    CoordId id = stem == "th" ? CoordId::theta(k) : (stem == "x" ? CoordId::x(k) : CoordId::y(k));
    if (!id.valid_for(dims_)) throw unknown();
    return id;
  }
};

}  // namespace

Superfunction parse_expr(std::string_view src, const Dims& dims) { return Parser(src, dims).parse(); }

std::string format_monomial(const Monomial& m, const Dims& dims) {
  std::vector<std::string> factors;
  auto even = [&](CoordId c) {
    const auto e = m.even[c.even_slot(dims)];
    if (e == 0) return;
    factors.push_back(e == 1 ? to_string(c) : to_string(c) + "^" + std::to_string(e));
  };
  even(CoordId::z());
  for (int k = 1; k <= dims.l; ++k) even(CoordId::x(k));
  for (int k = 1; k <= dims.l; ++k) even(CoordId::y(k));
  for (int j = 1; j <= dims.n; ++j)
    if (m.has_theta(j)) factors.push_back(to_string(CoordId::theta(j)));
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
  return out;
}

std::string format_expr(const Superfunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rat mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const bool unit = m.degree() == 0;
    if (unit)
      out += to_short_string(mag);
    else if (mag == 1)
      out += format_monomial(m, f.dims());
    else
      out += to_short_string(mag) + "*" + format_monomial(m, f.dims());
  }
  return out;
}

}  // namespace supercontact
