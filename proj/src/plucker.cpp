#include "colorful/plucker.hpp"

namespace colorful {

std::vector<VecX> nullspace(const MatX& a) {
  MatX r = a;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < cols && row < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < rows; ++i) {
      if (!is_zero(r(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    r.row(p).swap(r.row(row));
    const Rational inv = Rational(1) / r(row, c);
    r.row(row) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || is_zero(r(i, c))) continue;
      const Rational f = r(i, c);
      r.row(i) -= f * r.row(row);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VecX> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VecX v = VecX::Zero(cols);
    v(f) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v(pivot_cols[k]) = -r(static_cast<Eigen::Index>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

struct Six {
  VecX x;
  Vec3 d() const { return Vec3(x(0), x(1), x(2)); }
  Vec3 m() const { return Vec3(x(3), x(4), x(5)); }
};

Rational quadric(const Six& a, const Six& b) { return a.d().dot(b.m()) + b.d().dot(a.m()); }

PluckerLine<QuadScalar> combine(const Six& p, const QuadScalar& s, const Six& q, const QuadScalar& t) {
  PluckerLine<QuadScalar> out;
  for (int k = 0; k < 3; ++k) {
    out.d(k) = s * QuadScalar(p.x(k)) + t * QuadScalar(q.x(k));
    out.m(k) = s * QuadScalar(p.x(k + 3)) + t * QuadScalar(q.x(k + 3));
  }
  return out;
}

}  // namespace

// Lines X = (d, m) with side(X, L_i) = 0 form the nullspace of a 4x6 system.
// When that nullspace is the pencil sP + tQ, the Plücker relation becomes
// the binary quadratic s^2 q(P) + st B + t^2 q(Q) = 0 with q(X) = d.m.
FourLineResult common_transversals_4lines(const std::array<PluckerLine<Rational>, 4>& lines) {
  MatX a(4, 6);
  for (int i = 0; i < 4; ++i) {
    const auto& l = lines[static_cast<std::size_t>(i)];
    a.row(i) << l.m(0), l.m(1), l.m(2), l.d(0), l.d(1), l.d(2);
  }
  const auto basis = nullspace(a);
  if (basis.size() != 2) return DegeneratePencil{};
  const Six p{basis[0]};
  const Six q{basis[1]};
  const Rational qp = quadric(p, p) / 2;
  const Rational qq = quadric(q, q) / 2;
  const Rational bpq = quadric(p, q);
  if (qp.is_zero() && qq.is_zero() && bpq.is_zero()) return DegeneratePencil{};

  std::vector<PluckerLine<QuadScalar>> roots;
  if (!qq.is_zero()) {
    // s = 1: qq t^2 + bpq t + qp = 0.
    const Rational disc = bpq * bpq - 4 * qp * qq;
    if (disc.sign() >= 0) {
      const Rational base = -bpq / (2 * qq);
      const Rational coef = Rational(1) / (2 * qq);
      roots.push_back(combine(p, QuadScalar(1), q, QuadScalar(base, coef, disc)));
      if (!disc.is_zero()) roots.push_back(combine(p, QuadScalar(1), q, QuadScalar(base, -coef, disc)));
    }
  } else {
    // s (s qp + t bpq) = 0.
    roots.push_back(combine(p, QuadScalar(0), q, QuadScalar(1)));
    if (!bpq.is_zero()) roots.push_back(combine(p, QuadScalar(bpq), q, QuadScalar(-qp)));
  }
  std::vector<PluckerLine<QuadScalar>> out;
  for (auto& r : roots)
    if (!is_zero_vector(r.d)) out.push_back(std::move(r));
  return out;
}

}  // namespace colorful
