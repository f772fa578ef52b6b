#pragma once

#include "ivhs/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivhs {

/// Ordered, nonempty list of distinct coordinate names.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  /// x, y, z
  static VariableSet plane();
  /// x0, x1, x2, x3
  static VariableSet space();

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Monomial {
  std::vector<int> exponents;

  int degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Strict weak order: higher degree first, then exponent vectors compared
/// lexicographically with the first variable heaviest (x^2 before xy).
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree k in n variables, in graded-lex order.
std::vector<Monomial> graded_monomials(std::size_t nvars, int k);

/// dim S_k for S = k[x_1..x_n]; zero for negative k.
long monomial_count(std::size_t nvars, int k);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexOrder>;

  explicit Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VariableSet vars, const Rational& c);
  static Polynomial monomial(VariableSet vars, Monomial m, const Rational& c = Rational(1));
  static Polynomial variable(VariableSet vars, std::size_t index);

  const VariableSet& variables() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Common degree of all terms; empty for the zero polynomial and for
  /// inhomogeneous input.
  std::optional<int> homogeneous_degree() const;

  Rational coefficient(const Monomial& m) const;

  /// Adds c·m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_same_variables(const Polynomial& other) const;

  VariableSet vars_;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);

/// Exact product. Throws ValidationError when the variable sets differ.
Polynomial operator*(const Polynomial& a, const Polynomial& b);
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Parses text such as "x^4+y^4+z^4" or "x0*x1 - x2*x3".
///
/// Terms are joined by + or -. A term is an optional integer coefficient
/// (optionally written p/q) followed by variable powers v^e. Factors may be
/// juxtaposed, but a number followed by a variable needs an explicit '*'.
/// Names are matched against `vars`, longest name first, so "x0x1" splits
/// into x0·x1. Whitespace is ignored. Throws ParseError or ValidationError.
Polynomial parse_poly(std::string_view text, const VariableSet& vars);

std::string to_string(const Monomial& m, const VariableSet& vars);
/// Canonical text form; parse_poly(to_string(f), vars) == f.
std::string to_string(const Polynomial& f);

}  // namespace ivhs
