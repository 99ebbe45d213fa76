#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satnum/ideal.hpp"

namespace satnum {

/// Serializable description of an ideal: ambient dimension, generator exponent
/// vectors in canonical order, optional label.
struct IdealDocument {
  std::size_t n = 0;
  std::vector<std::vector<Exponent>> gens;
  std::string name;

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& v : gens) ms.emplace_back(v);
    return MonomialIdeal(n, std::move(ms));
  }

  static IdealDocument from_ideal(const MonomialIdeal& ideal, std::string name = "") {
    IdealDocument doc;
    doc.n = ideal.dimension();
    for (const Monomial& g : ideal.generators()) doc.gens.push_back(g.exponents());
    doc.name = std::move(name);
    return doc;
  }

  bool operator==(const IdealDocument&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

class TextCursor {
 public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  Exponent integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    Exponent value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      advance();
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(line_, column_, what);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

/// Grammar: "n=" INT ";" monomial ("," monomial)*; monomial = term ("*" term)*;
/// term = "x" INT ("^" INT)?. Variables are 1-based; repeated variables within
/// a monomial accumulate. If `reduced` is supplied it reports whether the
/// generator list shrank under minimalization.
inline IdealDocument parse_ideal(const std::string& text, bool* reduced = nullptr) {
  detail::TextCursor cur(text);
  cur.expect('n');
  cur.expect('=');
  Exponent n_value = cur.integer();
  if (n_value < 1) cur.fail("ambient dimension must be positive");
  auto n = static_cast<std::size_t>(n_value);
  cur.expect(';');

  std::vector<std::vector<Exponent>> raw;
  do {
    std::vector<Exponent> exps(n, 0);
    do {
      cur.expect('x');
      Exponent var = cur.integer();
      if (var < 1 || static_cast<std::size_t>(var) > n)
        cur.fail("variable index out of range");
      Exponent e = cur.accept('^') ? cur.integer() : 1;
      auto idx = static_cast<std::size_t>(var - 1);
      exps[idx] = checked_add(exps[idx], e);
    } while (cur.accept('*'));
    raw.push_back(std::move(exps));
  } while (cur.accept(','));
  if (!cur.at_end()) cur.fail("trailing input");

  std::vector<Monomial> ms;
  ms.reserve(raw.size());
  for (auto& v : raw) ms.emplace_back(std::move(v));
  MonomialIdeal ideal(n, std::move(ms));
  if (reduced) *reduced = ideal.generators().size() != raw.size();
  return IdealDocument::from_ideal(ideal);
}

inline nlohmann::json to_json(const IdealDocument& doc) {
  nlohmann::json j{{"n", doc.n}, {"gens", doc.gens}};
  if (!doc.name.empty()) j["name"] = doc.name;
  return j;
}

inline IdealDocument document_from_json(const nlohmann::json& j) {
  IdealDocument doc;
  doc.n = j.at("n").get<std::size_t>();
  doc.gens = j.at("gens").get<std::vector<std::vector<Exponent>>>();
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  // Re-canonicalize through the ideal so arrays come out sorted and minimal.
  return IdealDocument::from_ideal(doc.to_ideal(), doc.name);
}

/// Accepts either the text grammar or the JSON document format, sniffing on
/// the first non-space character.
inline IdealDocument load_ideal(const std::string& text, bool* reduced = nullptr) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j = nlohmann::json::parse(text);
    if (reduced) *reduced = false;
    return document_from_json(j);
  }
  return parse_ideal(text, reduced);
}

inline std::string format_monomial(const Monomial& u) {
  if (u.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (u[i] > 1) os << "^" << u[i];
    first = false;
  }
  return os.str();
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) os << ", ";
    os << format_monomial(ideal.generators()[i]);
  }
  os << ")";
  return os.str();
}

/// Text-grammar rendering of a proper non-zero ideal; round-trips through
/// parse_ideal.
inline std::string format_ideal_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("only proper non-zero ideals have a text form");
  std::ostringstream os;
  os << "n=" << ideal.dimension() << "; ";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) os << ", ";
    os << format_monomial(ideal.generators()[i]);
  }
  return os.str();
}

}  // namespace satnum
