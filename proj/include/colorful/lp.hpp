#ifndef COLORFUL_LP_HPP
#define COLORFUL_LP_HPP

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "colorful/scalar.hpp"

namespace colorful {

enum class Relation { GreaterEqual, Equal };

template <class K>
struct LinearConstraint {
  VecXT<K> coeffs;
  Relation relation;
  K rhs;
};

/// Constraints over free (unbounded) variables. Sign restrictions are
/// ordinary rows, so a Farkas certificate is a plain combination of rows.
template <class K>
class LinearSystem {
 public:
  explicit LinearSystem(Eigen::Index num_vars) : num_vars_(num_vars) {}

  Eigen::Index num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<LinearConstraint<K>>& rows() const { return rows_; }

  void add(VecXT<K> coeffs, Relation rel, K rhs) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("constraint arity mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  void add_ge(VecXT<K> coeffs, K rhs) { add(std::move(coeffs), Relation::GreaterEqual, std::move(rhs)); }
  void add_eq(VecXT<K> coeffs, K rhs) { add(std::move(coeffs), Relation::Equal, std::move(rhs)); }

  /// Row with a single nonzero coefficient.
  void add_bound(Eigen::Index var, K coeff, Relation rel, K rhs) {
    VecXT<K> c = VecXT<K>::Zero(num_vars_);
    c(var) = std::move(coeff);
    add(std::move(c), rel, std::move(rhs));
  }

 private:
  Eigen::Index num_vars_;
  std::vector<LinearConstraint<K>> rows_;
};

/// One multiplier per row; >=-rows carry non-negative multipliers and the
/// combined row reads 0 >= (positive constant).
template <class K>
struct FarkasCert {
  std::vector<K> multipliers;
};

template <class K>
struct Feasible {
  VecXT<K> witness;
};

template <class K>
struct Infeasible {
  FarkasCert<K> cert;
};

template <class K>
using LpResult = std::variant<Feasible<K>, Infeasible<K>>;

template <class K>
bool satisfies(const LinearSystem<K>& sys, const VecXT<K>& x) {
  if (x.size() != sys.num_vars()) return false;
  for (const auto& row : sys.rows()) {
    K lhs(0);
    for (Eigen::Index j = 0; j < x.size(); ++j)
      if (!is_zero(row.coeffs(j))) lhs += row.coeffs(j) * x(j);
    if (row.relation == Relation::Equal ? !(lhs == row.rhs) : lhs < row.rhs) return false;
  }
  return true;
}

template <class K>
bool verify_farkas(const LinearSystem<K>& sys, const FarkasCert<K>& cert) {
  if (cert.multipliers.size() != sys.num_rows()) return false;
  VecXT<K> combined = VecXT<K>::Zero(sys.num_vars());
  K bound(0);
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    const auto& row = sys.rows()[i];
    const K& u = cert.multipliers[i];
    if (row.relation == Relation::GreaterEqual && sign_of(u) < 0) return false;
    if (is_zero(u)) continue;
    for (Eigen::Index j = 0; j < sys.num_vars(); ++j)
      if (!is_zero(row.coeffs(j))) combined(j) += u * row.coeffs(j);
    bound += u * row.rhs;
  }
  return is_zero_vector(combined) && sign_of(bound) > 0;
}

namespace detail {

// Phase-one tableau: columns are [x+ | x- | slacks | artificials | rhs],
// the last row holds reduced costs of the auxiliary objective sum(artificials).
template <class K>
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const LinearSystem<K>& sys) : sys_(sys) {
    n_ = sys.num_vars();
    m_ = static_cast<Eigen::Index>(sys.num_rows());
    slack_count_ = 0;
    for (const auto& row : sys.rows())
      if (row.relation == Relation::GreaterEqual) ++slack_count_;
    art0_ = 2 * n_ + slack_count_;
    rhs_ = art0_ + m_;
    t_ = MatXT<K>::Zero(m_ + 1, rhs_ + 1);
    flip_.assign(static_cast<std::size_t>(m_), false);
    basis_.resize(static_cast<std::size_t>(m_));

    Eigen::Index slack = 2 * n_;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const auto& row = sys.rows()[static_cast<std::size_t>(i)];
      const bool flip = sign_of(row.rhs) < 0;
      flip_[static_cast<std::size_t>(i)] = flip;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (is_zero(row.coeffs(j))) continue;
        const K c = flip ? K(-row.coeffs(j)) : row.coeffs(j);
        t_(i, 2 * j) = c;
        t_(i, 2 * j + 1) = -c;
      }
      if (row.relation == Relation::GreaterEqual) t_(i, slack++) = flip ? K(1) : K(-1);
      t_(i, art0_ + i) = K(1);
      t_(i, rhs_) = flip ? K(-row.rhs) : row.rhs;
      basis_[static_cast<std::size_t>(i)] = art0_ + i;
    }
    for (Eigen::Index j = 0; j <= rhs_; ++j) {
      if (j >= art0_ && j < rhs_) continue;
      K s(0);
      for (Eigen::Index i = 0; i < m_; ++i)
        if (!is_zero(t_(i, j))) s -= t_(i, j);
      t_(m_, j) = s;
    }
  }

  // Bland's rule: smallest eligible entering column, smallest basic index on ties.
  void run() {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < art0_; ++j) {
        if (sign_of(t_(m_, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      Eigen::Index leave = -1;
      K best(0);
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (sign_of(t_(i, enter)) <= 0) continue;
        K ratio = t_(i, rhs_) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) throw std::logic_error("phase-one simplex reported an unbounded direction");
      pivot(leave, enter);
    }
  }

  bool feasible() const { return is_zero(t_(m_, rhs_)); }

  VecXT<K> witness() const {
    VecXT<K> x = VecXT<K>::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      if (b >= 2 * n_) continue;
      const Eigen::Index var = b / 2;
      if (b % 2 == 0)
        x(var) += t_(i, rhs_);
      else
        x(var) -= t_(i, rhs_);
    }
    return x;
  }

  // Phase-one duals y_i = 1 - (reduced cost of artificial i); undoing the
  // row sign flips gives multipliers of the original rows.
  FarkasCert<K> farkas() const {
    FarkasCert<K> cert;
    cert.multipliers.reserve(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) {
      K y = K(1) - t_(m_, art0_ + i);
      cert.multipliers.push_back(flip_[static_cast<std::size_t>(i)] ? K(-y) : y);
    }
    return cert;
  }

 private:
  void pivot(Eigen::Index r, Eigen::Index c) {
    const K inv = K(1) / t_(r, c);
    std::vector<Eigen::Index> nz;
    for (Eigen::Index j = 0; j <= rhs_; ++j) {
      if (is_zero(t_(r, j))) continue;
      t_(r, j) *= inv;
      nz.push_back(j);
    }
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r || is_zero(t_(i, c))) continue;
      const K f = t_(i, c);
      for (Eigen::Index j : nz) t_(i, j) -= f * t_(r, j);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  const LinearSystem<K>& sys_;
  Eigen::Index n_ = 0, m_ = 0, slack_count_ = 0, art0_ = 0, rhs_ = 0;
  MatXT<K> t_;
  std::vector<bool> flip_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Exact feasibility decision by phase-one simplex with Bland's rule. Both
/// outcomes are re-verified before returning; a failed verification is a
/// solver bug and throws std::logic_error.
template <class K>
LpResult<K> lp_solve(const LinearSystem<K>& sys) {
  detail::PhaseOneTableau<K> tab(sys);
  tab.run();
  if (tab.feasible()) {
    Feasible<K> out{tab.witness()};
    if (!satisfies(sys, out.witness)) throw std::logic_error("simplex witness failed re-verification");
    return out;
  }
  Infeasible<K> out{tab.farkas()};
  if (!verify_farkas(sys, out.cert)) throw std::logic_error("simplex Farkas certificate failed re-verification");
  return out;
}

template <class K>
bool is_feasible(const LpResult<K>& r) {
  return std::holds_alternative<Feasible<K>>(r);
}

}  // namespace colorful

#endif  // COLORFUL_LP_HPP
