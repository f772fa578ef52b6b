#include "ivhs/graded_quotient.hpp"

#include "ivhs/error.hpp"

#include <algorithm>

namespace ivhs {

namespace {

void validate_generators(const std::vector<Polynomial>& gens, const VariableSet& vars) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Polynomial& g = gens[i];
    const std::string where = "generator " + std::to_string(i);
    if (!(g.variables() == vars)) {
      throw ValidationError("gens", where + " uses a different variable set");
    }
    if (g.is_zero()) throw ValidationError("gens", where + " is zero");
    if (!g.homogeneous_degree()) throw ValidationError("gens", where + " is not homogeneous");
  }
}

VariableSet variables_of(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw ValidationError("gens", "no generators and no variable set");
  return gens.front().variables();
}

}  // namespace

long koszul_expected_dim(int a, int b, std::size_t nvars, int k) {
  return monomial_count(nvars, k) - monomial_count(nvars, k - a) - monomial_count(nvars, k - b) +
         monomial_count(nvars, k - a - b);
}

long ideal_degree_dim(const std::vector<Polynomial>& gens, int k) {
  if (gens.empty()) return 0;
  return static_cast<long>(GradedQuotientContext(gens, k).ideal_dim());
}

GradedQuotientContext::GradedQuotientContext(std::vector<Polynomial> gens, int degree)
    : vars_(variables_of(gens)), gens_(std::move(gens)), degree_(degree) {
  validate_generators(gens_, vars_);
  build();
}

GradedQuotientContext::GradedQuotientContext(VariableSet vars, std::vector<Polynomial> gens,
                                             int degree)
    : vars_(std::move(vars)), gens_(std::move(gens)), degree_(degree) {
  validate_generators(gens_, vars_);
  build();
}

void GradedQuotientContext::build() {
  monomials_ = graded_monomials(vars_.size(), degree_);
  for (std::size_t j = 0; j < monomials_.size(); ++j) {
    column_of_.emplace(monomials_[j], static_cast<Eigen::Index>(j));
  }

  std::vector<Polynomial> multiples;
  for (const Polynomial& g : gens_) {
    const int shift = degree_ - *g.homogeneous_degree();
    if (shift < 0) continue;
    for (const Monomial& m : graded_monomials(vars_.size(), shift)) {
      multiples.push_back(g * Polynomial::monomial(vars_, m));
    }
  }

  const auto cols = static_cast<Eigen::Index>(monomials_.size());
  ExactMatrix generators_matrix = ExactMatrix::Zero(static_cast<Eigen::Index>(multiples.size()), cols);
  for (std::size_t i = 0; i < multiples.size(); ++i) {
    for (const auto& [m, c] : multiples[i].terms()) {
      generators_matrix(static_cast<Eigen::Index>(i), column_of_.at(m)) = c;
    }
  }

  EchelonForm<Rational> e = rref(generators_matrix);
  pivots_ = std::move(e.pivots);
  echelon_ = e.reduced.topRows(static_cast<Eigen::Index>(pivots_.size()));

  std::vector<bool> is_pivot(monomials_.size(), false);
  for (Eigen::Index p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
  for (std::size_t j = 0; j < monomials_.size(); ++j) {
    if (is_pivot[j]) continue;
    basis_.push_back(monomials_[j]);
    basis_columns_.push_back(static_cast<Eigen::Index>(j));
  }
}

ExactVector GradedQuotientContext::reduce(const Polynomial& f) const {
  if (!(f.variables() == vars_)) {
    throw ValidationError("f", "variable-set mismatch with quotient context");
  }
  ExactVector coords = ExactVector::Zero(static_cast<Eigen::Index>(basis_.size()));
  if (f.is_zero()) return coords;
  const auto d = f.homogeneous_degree();
  if (!d || *d != degree_) {
    throw ValidationError("f", "expected a homogeneous form of degree " + std::to_string(degree_));
  }

  ExactVector v = ExactVector::Zero(static_cast<Eigen::Index>(monomials_.size()));
  for (const auto& [m, c] : f.terms()) v(column_of_.at(m)) = c;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational lead = v(pivots_[i]);
    if (lead.is_zero()) continue;
    v -= lead * echelon_.row(static_cast<Eigen::Index>(i)).transpose();
  }
  for (std::size_t j = 0; j < basis_columns_.size(); ++j) {
    coords(static_cast<Eigen::Index>(j)) = v(basis_columns_[j]);
  }
  return coords;
}

Polynomial GradedQuotientContext::lift(const ExactVector& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(basis_.size())) {
    throw ValidationError("coords", "length does not match quotient basis");
  }
  Polynomial out(vars_);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    out.add_term(basis_[j], coords(static_cast<Eigen::Index>(j)));
  }
  return out;
}

void check_regular_sequence(const Polynomial& first, const Polynomial& second, int max_degree) {
  const std::vector<Polynomial> gens{first, second};
  const int a = first.homogeneous_degree().value_or(0);
  const int b = second.homogeneous_degree().value_or(0);
  for (int k = 0; k <= max_degree; ++k) {
    const GradedQuotientContext ctx(gens, k);
    const long expected = koszul_expected_dim(a, b, first.variables().size(), k);
    const auto actual = static_cast<long>(ctx.dim());
    if (actual != expected) throw RegularSequenceError(k, expected, actual);
  }
}

}  // namespace ivhs
