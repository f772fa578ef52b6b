#include "ivhs/jacobian_ivhs.hpp"

#include "ivhs/error.hpp"

namespace ivhs {

namespace {

int validated_degree(const Polynomial& f) {
  if (f.variables().size() != 3) throw ValidationError("poly", "expected a ternary form");
  if (f.is_zero()) throw ValidationError("poly", "polynomial is zero");
  const auto d = f.homogeneous_degree();
  if (!d) throw ValidationError("poly", "polynomial is not homogeneous");
  if (*d < 4) throw ValidationError("poly", "Jacobian model needs degree >= 4");
  return *d;
}

std::vector<Polynomial> nonzero_partials(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.variables().size(); ++i) {
    Polynomial p = partial_derivative(f, i);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

JacobianContext::JacobianContext(Polynomial f)
    : f_(std::move(f)),
      d_(validated_degree(f_)),
      partials_(nonzero_partials(f_)),
      sections_(f_.variables(), partials_, d_ - 3),
      deformations_(f_.variables(), partials_, d_),
      h1_(f_.variables(), partials_, 2 * d_ - 3) {
  const int check = socle_degree() + 1;
  const GradedQuotientContext beyond = piece(check);
  if (beyond.dim() != 0) {
    throw ValidationError("poly", "not smooth: Jacobian ring has dimension " +
                                      std::to_string(beyond.dim()) + " in degree " +
                                      std::to_string(check));
  }
}

GradedQuotientContext JacobianContext::piece(int k) const {
  return GradedQuotientContext(f_.variables(), partials_, k);
}

bool operator==(const IVHSReport& a, const IVHSReport& b) {
  return a.xi == b.xi && a.matrix.rows() == b.matrix.rows() &&
         a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix && a.rank == b.rank &&
         a.is_max == b.is_max;
}

IVHSReport ivhs_matrix(const JacobianContext& ctx, const Polynomial& xi) {
  if (!(xi.variables() == ctx.form().variables())) {
    throw ValidationError("xi", "variable-set mismatch with F");
  }
  if (!xi.is_zero()) {
    const auto d = xi.homogeneous_degree();
    if (!d || *d != ctx.degree()) {
      throw ValidationError("xi", "expected a form of degree " + std::to_string(ctx.degree()));
    }
  }
  const auto& basis = ctx.sections().basis();
  IVHSReport r{xi, ExactMatrix::Zero(static_cast<Eigen::Index>(ctx.h1().dim()),
                                     static_cast<Eigen::Index>(basis.size())),
               0, false};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Polynomial product = xi * Polynomial::monomial(xi.variables(), basis[j]);
    r.matrix.col(static_cast<Eigen::Index>(j)) = ctx.h1().reduce(product);
  }
  r.rank = static_cast<long>(rank(r.matrix));
  r.is_max = r.rank == static_cast<long>(basis.size());
  return r;
}

namespace {

// Advances a strictly increasing index tuple over {0..n-1} in lexicographic
// order. Returns false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IVHSSearchResult ivhs_max_rank(const JacobianContext& ctx, long budget) {
  if (budget < 1) throw ValidationError("budget", "search budget must be >= 1");
  const VariableSet& vars = ctx.form().variables();
  const long full = static_cast<long>(ctx.sections().dim());
  const std::vector<Monomial> monomials = graded_monomials(vars.size(), ctx.degree());

  IVHSSearchResult result{ivhs_matrix(ctx, Polynomial(vars)), false, 0, 0};
  bool have_best = false;

  // Returns true when the search should stop.
  auto consider = [&](const Polynomial& xi) {
    IVHSReport report = ivhs_matrix(ctx, xi);
    const long index = result.candidates_tried++;
    if (!have_best || report.rank > result.best.rank) {
      result.best = std::move(report);
      result.best_index = index;
      have_best = true;
    }
    if (result.best.rank == full) result.achieved_max = true;
    return result.achieved_max || result.candidates_tried >= budget;
  };

  for (const Monomial& m : monomials) {
    if (consider(Polynomial::monomial(vars, m))) return result;
  }

  // A monomial whose class vanishes only duplicates a shorter sum.
  std::vector<Monomial> pool;
  for (const Monomial& m : monomials) {
    if (!all_zero(ctx.deformations().reduce(Polynomial::monomial(vars, m)))) pool.push_back(m);
  }
  for (std::size_t k = 2; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      Polynomial xi(vars);
      for (std::size_t i : idx) xi.add_term(pool[i], Rational(1));
      if (consider(xi)) return result;
    } while (next_combination(idx, pool.size()));
  }
  return result;
}

}  // namespace ivhs
