#include "ivhs/canonical_mult.hpp"

#include "ivhs/error.hpp"

#include <algorithm>

namespace ivhs {

bool operator==(const MultiplicationReport& a, const MultiplicationReport& b) {
  return a.model == b.model && a.section_labels == b.section_labels &&
         a.source_labels == b.source_labels && a.target_labels == b.target_labels &&
         a.pairs == b.pairs && a.source_dim == b.source_dim && a.target_dim == b.target_dim &&
         a.matrix.rows() == b.matrix.rows() && a.matrix.cols() == b.matrix.cols() &&
         a.matrix == b.matrix && a.rank == b.rank && a.kernel_dim == b.kernel_dim &&
         a.kernel_basis == b.kernel_basis;
}

std::vector<std::pair<int, int>> sym2_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

namespace {

std::string pair_label(const std::vector<std::string>& sections, std::pair<int, int> p) {
  return "(" + sections[static_cast<std::size_t>(p.first)] + ")*(" +
         sections[static_cast<std::size_t>(p.second)] + ")";
}

std::string relation_label(const ExactVector& v, const std::vector<std::string>& pair_labels) {
  std::string out;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const Rational& c = v(k);
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += pair_labels[static_cast<std::size_t>(k)];
  }
  return out.empty() ? "0" : out;
}

// Fills rank, kernel and labels once `matrix` and the basis labels are set.
void finish(MultiplicationReport& r) {
  r.source_dim = static_cast<long>(r.pairs.size());
  r.target_dim = static_cast<long>(r.target_labels.size());
  r.source_labels.clear();
  for (const auto& p : r.pairs) r.source_labels.push_back(pair_label(r.section_labels, p));
  r.rank = static_cast<long>(rank(r.matrix));
  r.kernel_basis.clear();
  for (ExactVector& v : kernel_basis(r.matrix)) {
    r.kernel_basis.push_back({relation_label(v, r.source_labels), std::move(v)});
  }
  r.kernel_dim = static_cast<long>(r.kernel_basis.size());
}

MultiplicationReport monomial_model(std::string model, const std::vector<Monomial>& sections,
                                    const GradedQuotientContext& target) {
  const VariableSet& vars = target.variables();
  MultiplicationReport r;
  r.model = std::move(model);
  for (const Monomial& m : sections) r.section_labels.push_back(to_string(m, vars));
  for (const Monomial& m : target.basis()) r.target_labels.push_back(to_string(m, vars));
  r.pairs = sym2_pairs(static_cast<int>(sections.size()));

  r.matrix = ExactMatrix::Zero(static_cast<Eigen::Index>(target.dim()),
                               static_cast<Eigen::Index>(r.pairs.size()));
  for (std::size_t col = 0; col < r.pairs.size(); ++col) {
    const auto [i, j] = r.pairs[col];
    const Monomial product =
        sections[static_cast<std::size_t>(i)] * sections[static_cast<std::size_t>(j)];
    r.matrix.col(static_cast<Eigen::Index>(col)) =
        target.reduce(Polynomial::monomial(vars, product));
  }
  finish(r);
  return r;
}

int require_form(const Polynomial& f, const std::string& field, std::size_t nvars) {
  if (f.variables().size() != nvars) {
    throw ValidationError(field, "expected a form in " + std::to_string(nvars) + " variables");
  }
  if (f.is_zero()) throw ValidationError(field, "polynomial is zero");
  const auto d = f.homogeneous_degree();
  if (!d) throw ValidationError(field, "polynomial is not homogeneous");
  return *d;
}

}  // namespace

MultiplicationReport plane_mu(const Polynomial& f, bool singular) {
  const int d = require_form(f, "poly", 3);
  if (d < 4) throw ValidationError("poly", "plane model needs degree >= 4 (genus >= 3)");
  // Generators of degree d exceed d - 3, so the section space is all of S_{d-3}.
  const GradedQuotientContext sections({f}, d - 3);
  const GradedQuotientContext target({f}, 2 * d - 6);
  return monomial_model(singular ? "singular-plane" : "plane", sections.basis(), target);
}

MultiplicationReport ci_mu(const Polynomial& q, const Polynomial& c) {
  const int a = require_form(q, "q", 4);
  const int b = require_form(c, "c", 4);
  if (!(q.variables() == c.variables())) {
    throw ValidationError("c", "q and c use different variable sets");
  }
  const int k = a + b - 4;
  if (k < 1) throw ValidationError("c", "complete intersection needs a + b >= 5");
  // A common factor of degree e shows up as a syzygy in degree a + b - e < a + b.
  check_regular_sequence(q, c, std::max(a + b - 1, 2 * k));
  const GradedQuotientContext sections({q, c}, k);
  const GradedQuotientContext target({q, c}, 2 * k);
  return monomial_model("complete-intersection(" + std::to_string(std::min(a, b)) + "," +
                            std::to_string(std::max(a, b)) + ")",
                        sections.basis(), target);
}

MultiplicationReport hyperelliptic_mu(int g) {
  if (g < 2) throw ValidationError("genus", "hyperelliptic model needs g >= 2");
  auto power = [](int e, const std::string& tail) {
    if (e == 0) return tail;
    return (e == 1 ? std::string("x") : "x^" + std::to_string(e)) + "*" + tail;
  };
  MultiplicationReport r;
  r.model = "hyperelliptic";
  for (int i = 0; i < g; ++i) r.section_labels.push_back(power(i, "dx/y"));
  for (int k = 0; k <= 2 * g - 2; ++k) r.target_labels.push_back(power(k, "(dx/y)^2"));
  r.pairs = sym2_pairs(g);
  r.matrix = ExactMatrix::Zero(2 * g - 1, static_cast<Eigen::Index>(r.pairs.size()));
  for (std::size_t col = 0; col < r.pairs.size(); ++col) {
    const auto [i, j] = r.pairs[col];
    r.matrix(i + j, static_cast<Eigen::Index>(col)) = Rational(1);
  }
  finish(r);
  return r;
}

Polynomial lift_relation(const MultiplicationReport& report, const ExactVector& coords,
                         const VariableSet& vars) {
  if (coords.size() != static_cast<Eigen::Index>(report.pairs.size())) {
    throw ValidationError("coords", "length does not match the Sym^2 basis");
  }
  std::vector<Polynomial> sections;
  for (const auto& label : report.section_labels) sections.push_back(parse_poly(label, vars));
  Polynomial out(vars);
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    const Rational& c = coords(static_cast<Eigen::Index>(k));
    if (c.is_zero()) continue;
    const auto [i, j] = report.pairs[k];
    out += c * (sections[static_cast<std::size_t>(i)] * sections[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace ivhs
