#include "gvd/parse.hpp"

#include <algorithm>
#include <cctype>

namespace gvd {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

class PolyParser {
 public:
  PolyParser(const std::string& text, const Ring& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  const std::string& s_;
  const Ring& ring_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_ws();
    bool negate = false;
    while (true) {
      if (consume('-')) negate = !negate;
      else if (consume('+')) continue;
      else break;
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      if (consume('+')) acc = acc + product();
      else if (consume('-')) acc = acc - product();
      else return acc;
    }
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        acc = acc * factor();
      } else if (consume('/')) {
        size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc.scaled(d.terms()[0].coeff.inverse());
      } else {
        // Reject implicit multiplication like "2x" or ")(".
        skip_ws();
        if (pos_ < s_.size() &&
            (is_ident_start(s_[pos_]) || std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
             s_[pos_] == '('))
          throw ParseError("missing operator (implicit multiplication is not allowed)", pos_);
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    bool negate = false;
    while (consume('-')) negate = !negate;
    Polynomial base = atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      size_t at = pos_;
      long e = integer_literal();
      if (e < 0) throw ParseError("negative exponent", at);
      base = base.pow(static_cast<int>(e));
    }
    return negate ? -base : base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      skip_ws();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (is_ident_start(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_.index_of(name);
      if (!idx) throw UnknownVariableError(name, start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  long integer_literal() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", pos_);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }
};

std::vector<std::string> split_top_level_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Ring parse_ring(const std::string& text) {
  std::vector<std::string> vars;
  for (const std::string& raw : split_top_level_commas(text)) {
    std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty variable name in ring", 0);
    size_t dots = tok.find("..");
    if (dots != std::string::npos) {
      std::string lo = trim(tok.substr(0, dots));
      std::string hi = trim(tok.substr(dots + 2));
      if (lo.size() != 1 || hi.size() != 1 || !is_ident_start(lo[0]) || !is_ident_start(hi[0]) ||
          lo[0] > hi[0])
        throw ParseError("invalid variable range '" + tok + "'", 0);
      for (char c = lo[0]; c <= hi[0]; ++c) vars.emplace_back(1, c);
    } else {
      if (!is_ident_start(tok[0]) || !std::all_of(tok.begin(), tok.end(), is_ident_char))
        throw ParseError("invalid variable name '" + tok + "'", 0);
      vars.push_back(tok);
    }
  }
  return Ring(std::move(vars));
}

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
  return PolyParser(text, ring).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring) {
  std::vector<Polynomial> out;
  if (trim(text).empty()) return out;
  for (const std::string& part : split_top_level_commas(text))
    out.push_back(parse_polynomial(part, ring));
  return out;
}

std::vector<int> parse_variable_order(const std::string& text, const Ring& ring) {
  std::vector<int> order;
  std::vector<bool> seen(static_cast<size_t>(ring.size()), false);
  for (const std::string& raw : split_top_level_commas(text)) {
    std::string tok = trim(raw);
    auto idx = ring.index_of(tok);
    if (!idx) throw UnknownVariableError(tok, 0);
    if (seen[static_cast<size_t>(*idx)]) throw ParseError("variable '" + tok + "' listed twice", 0);
    seen[static_cast<size_t>(*idx)] = true;
    order.push_back(*idx);
  }
  if (static_cast<int>(order.size()) != ring.size())
    throw ParseError("order must list every ring variable", 0);
  return order;
}

}  // namespace gvd
