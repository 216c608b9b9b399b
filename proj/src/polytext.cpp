#include "hessalg/polytext.hpp"

#include <cctype>

namespace hessalg {

namespace {

class Parser {
public:
  Parser(const std::string& src, const std::vector<std::string>& names, int nvars)
      : src_(src), names_(names), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < src_.size())
      fail(Errc::syntax_error,
           "unexpected character '" + std::string(1, src_[pos_]) +
               "' at position " + std::to_string(pos_),
           static_cast<long>(pos_));
    return p;
  }

private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*'))
        acc = acc * factor();
      else
        return acc;
    }
  }

  Polynomial factor() {
    skip_ws();
    if (accept('-')) return -factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '-')
      fail(Errc::negative_exponent,
           "negative exponent at position " + std::to_string(pos_),
           static_cast<long>(pos_));
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail(Errc::syntax_error,
           "exponent must be a nonnegative integer literal at position " +
               std::to_string(pos_),
           static_cast<long>(pos_));
    long e = uint_literal();
    Polynomial acc = Polynomial::constant(nvars_, 1);
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= src_.size())
      fail(Errc::syntax_error, "unexpected end of input", static_cast<long>(pos_));
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      Polynomial p = expr();
      skip_ws();
      if (!accept(')'))
        fail(Errc::syntax_error,
             "expected ')' at position " + std::to_string(pos_),
             static_cast<long>(pos_));
      return p;
    }
    fail(Errc::syntax_error,
         "unexpected character '" + std::string(1, c) + "' at position " +
             std::to_string(pos_),
         static_cast<long>(pos_));
  }

  Polynomial number() {
    size_t at = pos_;
    BigInt num(uint_literal());
    skip_ws();
    if (accept('/')) {
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail(Errc::syntax_error,
             "expected denominator at position " + std::to_string(pos_),
             static_cast<long>(pos_));
      BigInt den(uint_literal());
      if (den == 0)
        fail(Errc::syntax_error,
             "zero denominator at position " + std::to_string(at),
             static_cast<long>(at));
      Rational r(num, den);
      r.canonicalize();
      return Polynomial::constant(nvars_, r);
    }
    return Polynomial::constant(nvars_, Rational(num));
  }

  Polynomial identifier() {
    size_t at = pos_;
    std::string name;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      name += src_[pos_++];
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Polynomial::variable(nvars_, static_cast<int>(i));
    fail(Errc::unknown_identifier,
         "unknown identifier '" + name + "' at position " + std::to_string(at),
         static_cast<long>(at));
  }

  long uint_literal() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    if (digits.size() > 18)
      fail(Errc::syntax_error,
           "integer literal too large at position " + std::to_string(pos_),
           static_cast<long>(pos_));
    return std::stol(digits);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& src_;
  const std::vector<std::string>& names_;
  int nvars_;
  size_t pos_ = 0;
};

void validate_names(const PolyText& text) {
  std::vector<std::string> all(text.variable_names);
  all.insert(all.end(), text.parameter_names.begin(), text.parameter_names.end());
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i].empty()) fail(Errc::bad_config, "empty identifier name");
    for (size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        fail(Errc::bad_config, "duplicate identifier name '" + all[i] + "'");
  }
}

} // namespace

Polynomial parse_polynomial(const PolyText& text) {
  if (!text.parameter_names.empty())
    fail(Errc::bad_config, "parameters are not allowed here");
  validate_names(text);
  int v = static_cast<int>(text.variable_names.size());
  return Parser(text.source, text.variable_names, v).parse();
}

std::string render_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variable_names) {
  if (static_cast<int>(variable_names.size()) != p.vars())
    fail(Errc::variable_count_mismatch,
         "got " + std::to_string(variable_names.size()) + " names for " +
             std::to_string(p.vars()) + " variables");
  if (p.is_zero()) return "0";

  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
    }
    std::string vars;
    for (int i = 0; i < m.vars(); ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += variable_names[static_cast<size_t>(i)];
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += render_rational(a);
    } else {
      if (a != 1) out += render_rational(a) + "*";
      out += vars;
    }
  }
  return out;
}

std::vector<Polynomial> parse_family(
    const PolyText& text, const std::vector<std::vector<Rational>>& assignments) {
  if (text.parameter_names.empty())
    fail(Errc::bad_config, "family template needs parameter names");
  validate_names(text);
  int nv = static_cast<int>(text.variable_names.size());
  int np = static_cast<int>(text.parameter_names.size());

  std::vector<std::string> all(text.variable_names);
  all.insert(all.end(), text.parameter_names.begin(), text.parameter_names.end());
  Polynomial tpl = Parser(text.source, all, nv + np).parse();

  std::vector<Polynomial> out;
  out.reserve(assignments.size());
  for (const auto& tuple : assignments) {
    if (static_cast<int>(tuple.size()) != np)
      fail(Errc::arity_mismatch, "assignment has " + std::to_string(tuple.size()) +
                                     " entries for " + std::to_string(np) +
                                     " parameters");
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(nv + np));
    for (int i = 0; i < nv; ++i) images.push_back(Polynomial::variable(nv, i));
    for (int j = 0; j < np; ++j)
      images.push_back(Polynomial::constant(nv, tuple[static_cast<size_t>(j)]));
    out.push_back(tpl.substitute(images));
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip();
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() -> std::string {
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      d += text[pos++];
    return d;
  };
  std::string num = digits();
  if (num.empty())
    fail(Errc::syntax_error, "malformed rational '" + text + "'",
         static_cast<long>(pos));
  std::string den;
  skip();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip();
    den = digits();
    if (den.empty() || den.find_first_not_of('0') == std::string::npos)
      fail(Errc::syntax_error, "malformed rational '" + text + "'",
           static_cast<long>(pos));
  }
  skip();
  if (pos != text.size())
    fail(Errc::syntax_error, "malformed rational '" + text + "'",
         static_cast<long>(pos));
  Rational r(BigInt(num), den.empty() ? BigInt(1) : BigInt(den));
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

} // namespace hessalg
