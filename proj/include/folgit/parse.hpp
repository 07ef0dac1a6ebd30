#ifndef FOLGIT_PARSE_HPP
#define FOLGIT_PARSE_HPP

#include <folgit/errors.hpp>
#include <folgit/foliation.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace folgit {

/// Raw key/value content of an input file before validation.
struct FoliationSource {
  int degree = 0;
  std::string P, Q, R;
};

namespace detail {

/// Recursive-descent parser for
///   sum    := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | power
///   power  := atom ('^' integer)?
///   atom   := integer ('/' integer)? | x | y | z | '(' sum ')'
class ExprParser {
 public:
  ExprParser(std::string_view text, int line, int column_offset)
      : s_(text), line_(line), col0_(column_offset) {}

  Poly<3> parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Poly<3> p = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly<3> sum() {
    Poly<3> acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly<3> term() {
    Poly<3> acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly<3> factor() {
    if (accept('-')) return -factor();
    return power();
  }

  Poly<3> power() {
    Poly<3> base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly<3> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<3> inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return Poly<3>::variable(static_cast<std::size_t>(c - 'x'));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den(1);
      if (accept('/')) {
        const std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly<3>(q);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

inline HomogPoly homogeneous_component(const Poly<3>& p, int d, const std::string& name) {
  if (!p.is_zero() && (!p.is_homogeneous() || p.total_degree() != d)) {
    if (!p.is_homogeneous()) throw Inhomogeneous("component " + name + " is not homogeneous");
    throw DegreeMismatch("component " + name + " has degree " + std::to_string(p.total_degree()) +
                         ", declared degree is " + std::to_string(d));
  }
  return HomogPoly(d, p);
}

}  // namespace detail

/// Parses one polynomial expression in x, y, z.
inline Poly<3> parse_polynomial(std::string_view text, int line = 1, int column_offset = 0) {
  return detail::ExprParser(text, line, column_offset).parse();
}

/// Parses a curve F = 0; F must be homogeneous and non-constant.
inline HomogPoly parse_curve(std::string_view text) {
  const Poly<3> p = parse_polynomial(text);
  if (p.is_zero() || p.total_degree() == 0) throw Inhomogeneous("curve must be a non-constant polynomial");
  if (!p.is_homogeneous()) throw Inhomogeneous("curve polynomial is not homogeneous");
  return HomogPoly(p.total_degree(), p);
}

/// Splits `key: value` lines, dropping `#` comments.
inline FoliationSource parse_source(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::pair<int, int>>> fields;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no, static_cast<int>(first) + 1);
    std::size_t kend = colon;
    while (kend > first && std::isspace(static_cast<unsigned char>(line[kend - 1]))) --kend;
    const std::string key(line.substr(first, kend - first));
    if (key != "degree" && key != "P" && key != "Q" && key != "R") {
      throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(first) + 1);
    }
    if (fields.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(first) + 1);
    fields[key] = {std::string(line.substr(colon + 1)), {line_no, static_cast<int>(colon) + 1}};
  }
  for (const char* k : {"degree", "P", "Q", "R"}) {
    if (!fields.count(k)) throw ParseError(std::string("missing key '") + k + "'", line_no, 1);
  }
  FoliationSource src;
  const auto& [dtext, dpos] = fields["degree"];
  std::size_t a = 0, b = dtext.size();
  while (a < b && std::isspace(static_cast<unsigned char>(dtext[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(dtext[b - 1]))) --b;
  const std::string dstr = dtext.substr(a, b - a);
  if (dstr.empty() || dstr.size() > 4 || dstr.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("degree must be a positive integer", dpos.first, dpos.second + static_cast<int>(a) + 1);
  }
  src.degree = std::stoi(dstr);
  src.P = fields["P"].first;
  src.Q = fields["Q"].first;
  src.R = fields["R"].first;
  // keep positions for expression diagnostics
  detail::ExprParser(src.P, fields["P"].second.first, fields["P"].second.second).parse();
  detail::ExprParser(src.Q, fields["Q"].second.first, fields["Q"].second.second).parse();
  detail::ExprParser(src.R, fields["R"].second.first, fields["R"].second.second).parse();
  return src;
}

/// The vector field as written, before radial normalization.
inline VectorField to_vector_field(const FoliationSource& src) {
  const int d = src.degree;
  if (d < 1) throw DegreeMismatch("foliation degree must be at least 1");
  return VectorField(d, detail::homogeneous_component(parse_polynomial(src.P), d, "P"),
                     detail::homogeneous_component(parse_polynomial(src.Q), d, "Q"),
                     detail::homogeneous_component(parse_polynomial(src.R), d, "R"));
}

inline Foliation parse_foliation(std::string_view text) { return validate(to_vector_field(parse_source(text))); }

inline std::string print_foliation(const VectorField& v) {
  std::ostringstream out;
  out << "degree: " << v.degree << "\n";
  out << "P: " << to_string(v.P) << "\n";
  out << "Q: " << to_string(v.Q) << "\n";
  out << "R: " << to_string(v.R) << "\n";
  return out.str();
}

inline std::string print_foliation(const Foliation& f) { return print_foliation(f.rep()); }

}  // namespace folgit

#endif  // FOLGIT_PARSE_HPP
