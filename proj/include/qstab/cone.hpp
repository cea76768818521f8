#pragma once

#include <stdexcept>
#include <vector>

#include "qstab/linalg.hpp"
#include "qstab/quiver.hpp"
#include "qstab/stability.hpp"

namespace qstab {

// For fixed r the defining inequalities become linear forms in w: record
// (L, R) turns into the coefficient vector 1_L/(r.1_L) - 1_R/(r.1_R), so the
// form evaluated at w equals mu([L]) - mu([R]).  Total stability at (w, r)
// is exactly "every form positive at w".  Every form vanishes at w = r.
struct linear_form_system {
  int n = 1;
  std::vector<std::vector<rational>> forms;  // (n-1) x n
};

namespace detail {

inline void check_positive_vector(const rational_vector& r, int n, const char* who) {
  if (static_cast<int>(r.size()) != n)
    throw std::invalid_argument(std::string(who) + ": r has wrong length");
  for (const rational& e : r)
    if (e.sign() <= 0) throw std::invalid_argument(std::string(who) + ": r must be entrywise positive");
}

}  // namespace detail

inline linear_form_system inequality_matrix(const type_a_quiver& q, const rational_vector& r) {
  detail::check_positive_vector(r, q.n, "inequality_matrix");
  const inequality_system sys = total_stability_inequalities(q);
  linear_form_system out;
  out.n = q.n;
  out.forms.reserve(sys.items.size());
  for (const inequality_record& rec : sys.items) {
    rational rl = 0, rr = 0;
    for (const int v : rec.lhs) rl += r[static_cast<std::size_t>(v - 1)];
    for (const int v : rec.rhs) rr += r[static_cast<std::size_t>(v - 1)];
    std::vector<rational> form(static_cast<std::size_t>(q.n), rational(0));
    for (const int v : rec.lhs) form[static_cast<std::size_t>(v - 1)] += rational(1) / rl;
    for (const int v : rec.rhs) form[static_cast<std::size_t>(v - 1)] -= rational(1) / rr;
    out.forms.push_back(std::move(form));
  }
  return out;
}

inline rational evaluate_form(const std::vector<rational>& form, const rational_vector& w) {
  if (form.size() != w.size()) throw std::invalid_argument("evaluate_form: length mismatch");
  rational acc = 0;
  for (std::size_t i = 0; i < form.size(); ++i) acc += form[i] * w[i];
  return acc;
}

// A weight w with every form equal to 1, hence strictly inside the total
// stability cone over r.  The forms have rank n-1, so the square-after-pivot
// system is always solvable; inconsistency would be an internal invariant
// failure and surfaces as std::logic_error.  Free variables are set to zero
// under the elimination pivot rule, which pins the output deterministically.
inline rational_vector construct_total_weight(const type_a_quiver& q, const rational_vector& r) {
  detail::check_positive_vector(r, q.n, "construct_total_weight");
  if (q.n == 1) return rational_vector{rational(0)};
  const linear_form_system sys = inequality_matrix(q, r);
  const std::vector<rational> ones(sys.forms.size(), rational(1));
  return solve_particular(sys.forms, ones, q.n);
}

// A weight violating exactly the k-th record (1-based): form_j(w) = 1 for
// j != k and form_k(w) = -1.  Existence certifies that record k cannot be
// dropped from the defining set.
inline rational_vector minimality_witness(const type_a_quiver& q, const rational_vector& r, int k) {
  detail::check_positive_vector(r, q.n, "minimality_witness");
  if (q.n < 2) throw std::invalid_argument("minimality_witness: no inequalities for a single vertex");
  if (k < 1 || k > q.n - 1) throw std::invalid_argument("minimality_witness: record index out of range");
  const linear_form_system sys = inequality_matrix(q, r);
  std::vector<rational> rhs(sys.forms.size(), rational(1));
  rhs[static_cast<std::size_t>(k - 1)] = rational(-1);
  return solve_particular(sys.forms, rhs, q.n);
}

// Exact rank and kernel of the form matrix.  The expected picture from the
// cone geometry: rank n-1 with kernel spanned by r (the lineality direction),
// which makes (w.r, forms) a linear chart of the fiber over r.
struct fiber_report {
  int rank = 0;
  std::vector<rational_vector> kernel_basis;
  bool is_chart = false;
};

inline bool proportional(const rational_vector& a, const rational_vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

inline fiber_report lineality_check(const type_a_quiver& q, const rational_vector& r) {
  detail::check_positive_vector(r, q.n, "lineality_check");
  const linear_form_system sys = inequality_matrix(q, r);
  fiber_report report;
  if (sys.forms.empty()) {
    report.rank = 0;
    report.kernel_basis = {rational_vector{rational(1)}};
  } else {
    const rref_result rr = reduced_row_echelon(sys.forms, q.n);
    report.rank = rr.rank;
    report.kernel_basis = kernel_basis(sys.forms, q.n);
  }
  report.is_chart = report.rank == q.n - 1 && report.kernel_basis.size() == 1 &&
                    proportional(report.kernel_basis[0], r);
  return report;
}

}  // namespace qstab
