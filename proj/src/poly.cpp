#include "ivhs/poly.hpp"

#include "ivhs/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace ivhs {

// ---------------------------------------------------------------------------
// VariableSet

namespace {

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("vars", "variable set is empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !is_identifier_start(n.front()) ||
        !std::all_of(n.begin(), n.end(), is_identifier_char)) {
      throw ValidationError("vars", "invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw ValidationError("vars", "duplicate variable name '" + n + "'");
    }
  }
}

VariableSet VariableSet::plane() { return VariableSet({"x", "y", "z"}); }

VariableSet VariableSet::space() { return VariableSet({"x0", "x1", "x2", "x3"}); }

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomials

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                      a.exponents.begin(), a.exponents.end());
}

namespace {

void enumerate_monomials(std::vector<int>& current, std::size_t position, int remaining,
                         std::vector<Monomial>& out) {
  if (position + 1 == current.size()) {
    current[position] = remaining;
    out.push_back(Monomial{current});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[position] = e;
    enumerate_monomials(current, position + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> graded_monomials(std::size_t nvars, int k) {
  std::vector<Monomial> out;
  if (k < 0 || nvars == 0) return out;
  std::vector<int> current(nvars, 0);
  enumerate_monomials(current, 0, k, out);
  return out;
}

long monomial_count(std::size_t nvars, int k) {
  if (k < 0 || nvars == 0) return 0;
  // C(k + n - 1, n - 1), built incrementally to stay exact.
  long result = 1;
  const long n = static_cast<long>(nvars) - 1;
  for (long i = 1; i <= n; ++i) result = result * (k + i) / i;
  return result;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(VariableSet vars, const Rational& c) {
  const std::size_t n = vars.size();
  return monomial(std::move(vars), Monomial{std::vector<int>(n, 0)}, c);
}

Polynomial Polynomial::monomial(VariableSet vars, Monomial m, const Rational& c) {
  if (m.exponents.size() != vars.size()) {
    throw ValidationError("monomial", "exponent vector length does not match variable set");
  }
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(VariableSet vars, std::size_t index) {
  std::vector<int> e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), Monomial{std::move(e)});
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) {
    throw ValidationError("vars", "variable-set mismatch between operands");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.variables() == b.variables())) {
    throw ValidationError("vars", "variable-set mismatch between operands");
  }
  Polynomial out(a.variables());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.variables().size()) {
    throw ValidationError("var", "variable index out of range");
  }
  Polynomial out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponents[var];
    if (e == 0) continue;
    Monomial lowered = m;
    --lowered.exponents[var];
    out.add_term(lowered, c * e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = m.degree() == 0;
    if (constant) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_string(m, f.variables());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial result(vars_);
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError(pos_, std::string("expected '+' or '-' but found '") + peek() + "'");
      }
      first = false;
      Monomial m{std::vector<int>(vars_.size(), 0)};
      const Rational c = parse_term(m);
      result.add_term(m, sign * c);
      skip_space();
      if (at_end()) break;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  Integer parse_digits() {
    skip_space();
    const std::size_t start = pos_;
    std::string digits;
    while (!at_end()) {
      if (is_digit(text_[pos_])) {
        digits += text_[pos_];
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
        ++pos_;
      } else {
        break;
      }
    }
    if (digits.empty()) throw ParseError(start, "expected digits");
    return Integer(digits);
  }

  // Parses digits, then rewinds over trailing whitespace so the caller sees
  // the next significant character.
  Integer parse_number() {
    Integer n = parse_digits();
    while (pos_ > 0 && std::isspace(static_cast<unsigned char>(text_[pos_ - 1])) != 0) --pos_;
    return n;
  }

  void require_no_letter_after_number() {
    skip_space();
    if (is_identifier_start(peek())) {
      throw ParseError(pos_, "'*' required between a number and a variable");
    }
  }

  Rational parse_term(Monomial& m) {
    skip_space();
    Rational coefficient(1);
    if (is_digit(peek())) {
      const Integer num = parse_number();
      skip_space();
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = parse_number();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coefficient = Rational(num, den);
      skip_space();
      if (peek() == '*') {
        ++pos_;
        parse_factors(m);
      } else {
        require_no_letter_after_number();
        if (peek() == '^') throw ParseError(pos_, "exponent applied to a number");
      }
      return coefficient;
    }
    if (!is_identifier_start(peek())) {
      throw ParseError(pos_, at_end() ? std::string("unexpected end of input")
                                      : std::string("unexpected character '") + peek() + "'");
    }
    parse_factors(m);
    return coefficient;
  }

  void parse_factors(Monomial& m) {
    while (true) {
      skip_space();
      if (!is_identifier_start(peek())) {
        throw ParseError(pos_, "expected a variable");
      }
      const bool had_exponent = parse_factor(m);
      skip_space();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (is_identifier_start(peek())) {
        if (had_exponent) throw ParseError(pos_, "'*' required between a number and a variable");
        continue;
      }
      return;
    }
  }

  // Reads one identifier token, splits it into declared names (longest
  // match first), applies an optional exponent to the last name. Returns
  // whether an exponent was present.
  bool parse_factor(Monomial& m) {
    const std::size_t start = pos_;
    while (!at_end() && is_identifier_char(text_[pos_])) ++pos_;
    const std::string_view token = text_.substr(start, pos_ - start);

    std::vector<std::size_t> pieces;
    std::size_t offset = 0;
    while (offset < token.size()) {
      std::size_t best_len = 0;
      std::size_t best_index = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const std::string& name = vars_.name(i);
        if (name.size() > best_len && token.substr(offset, name.size()) == name) {
          best_len = name.size();
          best_index = i;
        }
      }
      if (best_len == 0) {
        throw ValidationError("poly", "unknown variable '" + std::string(token) +
                                          "' at position " + std::to_string(start));
      }
      pieces.push_back(best_index);
      offset += best_len;
    }

    int exponent = 1;
    bool had_exponent = false;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (peek() == '-') {
        throw ValidationError("poly", "negative exponent at position " + std::to_string(pos_));
      }
      const std::size_t at = pos_;
      const Integer e = parse_number();
      if (e > 1000000) throw ParseError(at, "exponent too large");
      exponent = e.convert_to<int>();
      had_exponent = true;
    }
    for (std::size_t k = 0; k + 1 < pieces.size(); ++k) m.exponents[pieces[k]] += 1;
    m.exponents[pieces.back()] += exponent;
    return had_exponent;
  }

  std::string_view text_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VariableSet& vars) {
  return PolyParser(text, vars).parse();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool saw_digit = false;
  bool saw_slash = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/' && !saw_slash && saw_digit && k + 1 < s.size()) {
      saw_slash = true;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(s[k])) == 0) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    saw_digit = true;
  }
  if (!saw_digit) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (saw_slash) {
    const std::string den = s.substr(s.find('/') + 1);
    if (den.find_first_not_of('0') == std::string::npos) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(s);
}

}  // namespace ivhs
