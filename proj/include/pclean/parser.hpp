#pragma once
// Text input for ideals:
//   ideal    := '(' monomial (',' monomial)* ')' | 'intersect(' ideal (',' ideal)* ')'
//   monomial := term ('*' term)* | '1'
//   term     := var ('^' int)?
// Whitespace is ignored between tokens. Printing (MonomialIdeal::to_string,
// Monomial::to_string) emits the same grammar.

#include <cctype>
#include <string>
#include <string_view>

#include "pclean/ideal.hpp"

namespace pclean {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

namespace detail {

// Exponents above this bound are rejected; the arithmetic only needs small ones.
constexpr Exponent kMaxExponent = Exponent{1} << 31;

class IdealParser {
 public:
  IdealParser(std::string_view text, const Ambient& amb) : text_(text), amb_(amb) {}

  MonomialIdeal parse() {
    MonomialIdeal result = ideal();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after ideal");
    return result;
  }

  Monomial parse_single_monomial() {
    Monomial m = monomial();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after monomial");
    return m;
  }

 private:
  std::string_view text_;
  const Ambient& amb_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                (pos_ > start && std::isdigit(static_cast<unsigned char>(c)));
      if (!ok) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a variable name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent integer() {
    skip_ws();
    size_t start = pos_;
    Exponent value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  Monomial monomial() {
    if (peek() == '1') {
      ++pos_;
      return Monomial::unit(amb_.size());
    }
    std::vector<Exponent> exps(static_cast<size_t>(amb_.size()), 0);
    while (true) {
      size_t at = pos_;
      std::string name = identifier();
      auto var = amb_.index_of(name);
      if (!var) {
        pos_ = at;
        fail("unknown variable '" + name + "'");
      }
      Exponent e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer();
      }
      exps[static_cast<size_t>(*var)] += e;
      if (peek() != '*') break;
      ++pos_;
    }
    return Monomial(std::move(exps));
  }

  MonomialIdeal generator_list() {
    expect('(');
    std::vector<Monomial> gens;
    gens.push_back(monomial());
    while (peek() == ',') {
      ++pos_;
      gens.push_back(monomial());
    }
    expect(')');
    return MonomialIdeal(amb_, std::move(gens));
  }

  MonomialIdeal ideal() {
    skip_ws();
    if (text_.substr(pos_).rfind("intersect", 0) == 0) {
      pos_ += 9;
      expect('(');
      MonomialIdeal acc = ideal();
      while (peek() == ',') {
        ++pos_;
        acc = intersect(acc, ideal());
      }
      expect(')');
      return acc;
    }
    return generator_list();
  }
};

}  // namespace detail

/// Evaluates the grammar above; intersections are carried out, and the result
/// is in canonical minimal form.
inline MonomialIdeal parse_ideal(std::string_view text, const Ambient& ambient) {
  return detail::IdealParser(text, ambient).parse();
}

inline Monomial parse_monomial(std::string_view text, const Ambient& ambient) {
  return detail::IdealParser(text, ambient).parse_single_monomial();
}

}  // namespace pclean
