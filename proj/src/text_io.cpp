#include "qhall/text_io.hpp"

#include <cctype>
#include <sstream>

namespace qhall {

namespace {

std::string power_product_text(const Exps& e) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarName[i];
    if (e[i] != 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
  return out;
}

std::string term_body(const Exps& e, const Int& abs_coeff) {
  std::string mono = power_product_text(e);
  if (mono.empty()) return abs_coeff.str();
  if (abs_coeff == 1) return mono;
  return abs_coeff.str() + "*" + mono;
}

/** Single-pass scanner shared by the monomial and series parsers. */
class Scanner {
 public:
  explicit Scanner(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  long long parse_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return neg ? -v : v;
  }

  /**
   * One signed term: [coeff][*] var[^exp] (* var[^exp])*.
   * leading_sign is +1/-1 from the series-level separator.
   */
  Monomial parse_term(int leading_sign) {
    Monomial m{Int(leading_sign)};
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      m.coeff *= Int(digits);
      saw_factor = true;
      if (peek() == '*') {
        advance();
        if (!std::isalpha(static_cast<unsigned char>(peek())))
          fail("dangling '*'");
      }
    }
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      Var v = var_from_name(peek());
      advance();
      long long exp = 1;
      if (peek() == '^') {
        advance();
        exp = parse_int();
      }
      m.e[static_cast<int>(v)] += static_cast<int>(exp);
      saw_factor = true;
      if (peek() == '*') {
        advance();
        if (!std::isalpha(static_cast<unsigned char>(peek())) &&
            !std::isdigit(static_cast<unsigned char>(peek())))
          fail("dangling '*'");
      }
    }
    if (!saw_factor) fail("expected a coefficient or a variable");
    return m;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string monomial_to_text(const Monomial& m) {
  if (m.coeff >= 0) return term_body(m.e, m.coeff);
  return "-" + term_body(m.e, Int(-m.coeff));
}

Monomial parse_monomial(const std::string& text) {
  Scanner sc(text);
  int sign = 1;
  if (sc.peek() == '-') {
    sign = -1;
    sc.advance();
  } else if (sc.peek() == '+') {
    sc.advance();
  }
  Monomial m = sc.parse_term(sign);
  if (!sc.done()) sc.fail("trailing input after monomial");
  return m;
}

std::string series_to_text(const GradedSeries& s) {
  auto terms = s.sorted_terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool neg = c < 0;
    std::string body = term_body(e, neg ? Int(-c) : c);
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

GradedSeries parse_series(const std::string& text, const Grading& g) {
  Scanner sc(text);
  GradedSeries r(g);
  if (sc.done()) throw std::invalid_argument("empty series text");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.peek() == '+') {
      if (first) sc.fail("series may not start with '+'");
      sc.advance();
    } else if (sc.peek() == '-') {
      sign = -1;
      sc.advance();
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    Monomial m = sc.parse_term(sign);
    r.add_term(m);
    first = false;
  }
  return r;
}

Json series_to_json(const GradedSeries& s) {
  Json arr = Json::array();
  for (const auto& [e, c] : s.sorted_terms()) {
    Json exps = Json::object();
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) exps[std::string(1, kVarName[i])] = e[i];
    arr.push_back(Json{{"coeff", c.str()}, {"exps", exps}});
  }
  return arr;
}

GradedSeries series_from_json(const Json& j, const Grading& g) {
  if (!j.is_array())
    throw std::invalid_argument("series JSON must be an array of terms");
  GradedSeries r(g);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
      throw std::invalid_argument(
          "series JSON term needs 'coeff' and 'exps' members");
    Int c(term.at("coeff").get<std::string>());
    Exps e{};
    for (const auto& [name, val] : term.at("exps").items()) {
      if (name.size() != 1)
        throw std::invalid_argument("bad variable name in series JSON");
      e[static_cast<int>(var_from_name(name[0]))] = val.get<int>();
    }
    r.add_term(e, c);
  }
  return r;
}

std::string series_to_csv(const GradedSeries& s) {
  auto terms = s.sorted_terms();
  std::array<bool, kNumVars> used{};
  for (const auto& [e, c] : terms)
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) used[i] = true;
  std::ostringstream out;
  for (int i = 0; i < kNumVars; ++i)
    if (used[i]) out << kVarName[i] << ',';
  out << "coeff\n";
  for (const auto& [e, c] : terms) {
    for (int i = 0; i < kNumVars; ++i)
      if (used[i]) out << e[i] << ',';
    out << c.str() << '\n';
  }
  return out.str();
}

}  // namespace qhall
