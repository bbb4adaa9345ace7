#include "laxwb/laxalg/algebra_type.hpp"

#include <set>
#include <stdexcept>

#include "laxwb/errors.hpp"

namespace laxwb {

AlgebraType::AlgebraType(AlgebraKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw std::invalid_argument("algebra size must be positive");
}

AlgebraType AlgebraType::parse(const std::string& kind, int n) {
  if (kind == "gl") return {AlgebraKind::gl, n};
  if (kind == "sl") return {AlgebraKind::sl, n};
  if (kind == "s") return {AlgebraKind::s, n};
  if (kind == "so") return {AlgebraKind::so, n};
  if (kind == "sp") return {AlgebraKind::sp, n};
  throw std::invalid_argument("unknown algebra type '" + kind + "'");
}

int AlgebraType::dimension() const {
  switch (kind_) {
    case AlgebraKind::gl: return n_ * n_;
    case AlgebraKind::sl: return n_ * n_ - 1;
    case AlgebraKind::s: return 1;
    case AlgebraKind::so: return n_ * (n_ - 1) / 2;
    case AlgebraKind::sp: return n_ * (2 * n_ + 1);
  }
  return 0;
}

std::string AlgebraType::kind_name() const {
  switch (kind_) {
    case AlgebraKind::gl: return "gl";
    case AlgebraKind::sl: return "sl";
    case AlgebraKind::s: return "s";
    case AlgebraKind::so: return "so";
    case AlgebraKind::sp: return "sp";
  }
  return "?";
}

std::string AlgebraType::name() const {
  return kind_name() + "(" + std::to_string(kind_ == AlgebraKind::sp ? 2 * n_ : n_) + ")";
}

ScalarMatrix AlgebraType::sigma() const {
  const int m = size();
  ScalarMatrix s(m, m);
  if (kind_ != AlgebraKind::sp) return s;
  for (int i = 0; i < n_; ++i) {
    s(i, n_ + i) = Scalar(1);
    s(n_ + i, i) = Scalar(-1);
  }
  return s;
}

bool AlgebraType::contains(const ScalarMatrix& x) const {
  const int m = size();
  if (x.rows() != m || x.cols() != m) return false;
  switch (kind_) {
    case AlgebraKind::gl: return true;
    case AlgebraKind::sl: return x.trace().is_zero();
    case AlgebraKind::s:
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i != j && !x(i, j).is_zero()) return false;
          if (i == j && !(x(i, i) == x(0, 0))) return false;
        }
      }
      return true;
    case AlgebraKind::so: return (x + x.transpose()).is_zero();
    case AlgebraKind::sp: {
      const ScalarMatrix s = sigma();
      return (x.transpose() * s + s * x).is_zero();
    }
  }
  return false;
}

std::vector<ScalarMatrix> matrix_basis(const AlgebraType& algebra) {
  const int n = algebra.n();
  const int m = algebra.size();
  std::vector<ScalarMatrix> out;
  auto unit = [m](int i, int j) {
    ScalarMatrix e(m, m);
    e(i, j) = Scalar(1);
    return e;
  };
  switch (algebra.kind()) {
    case AlgebraKind::gl:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(unit(i, j));
      break;
    case AlgebraKind::sl:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) out.push_back(unit(i, j));
      for (int i = 0; i + 1 < n; ++i) out.push_back(unit(i, i) - unit(i + 1, i + 1));
      break;
    case AlgebraKind::s:
      out.push_back(ScalarMatrix::identity(n) * Scalar::rational(1, n));
      break;
    case AlgebraKind::so:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(i, j) - unit(j, i));
      break;
    case AlgebraKind::sp:
      // [[A, 0], [0, -A^t]], then [[0, B], [0, 0]] and [[0, 0], [C, 0]] with B, C symmetric.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(unit(i, j) - unit(n + j, n + i));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(i == j ? unit(i, n + i) : unit(i, n + j) + unit(j, n + i));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(i == j ? unit(n + i, i) : unit(n + i, j) + unit(n + j, i));
      break;
  }
  return out;
}

ScalarVector basis_coordinates(const AlgebraType& algebra, const ScalarMatrix& x) {
  const auto basis = matrix_basis(algebra);
  const int m = algebra.size();
  if (algebra.kind() == AlgebraKind::gl) {
    ScalarVector c;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) c.push_back(x(i, j));
    return c;
  }
  ScalarMatrix a(m * m, static_cast<int>(basis.size()));
  ScalarVector rhs(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < basis.size(); ++r) a(i * m + j, static_cast<int>(r)) = basis[r](i, j);
      rhs[static_cast<std::size_t>(i * m + j)] = x(i, j);
    }
  }
  auto sol = solve_affine(a, rhs);
  if (!sol) throw std::invalid_argument("matrix is not in " + algebra.name());
  return *sol;
}

bool TyurinPoint::active() const { return !is_zero(alpha); }

int AlgebraSpec::weak_pole_order(const TyurinPoint& w) const {
  if (!w.active()) return 0;
  return algebra.kind() == AlgebraKind::sp ? 2 : 1;
}

void AlgebraSpec::validate() const {
  if (!curve.contains(p_plus)) throw InvalidTyurin("P+ " + p_plus.str() + " is not on the curve");
  if (!curve.contains(p_minus)) throw InvalidTyurin("P- " + p_minus.str() + " is not on the curve");
  if (p_plus == p_minus) throw InvalidTyurin("P+ and P- coincide");
  if (static_cast<int>(tyurin.size()) != required_weak_points()) {
    throw InvalidTyurin("expected " + std::to_string(required_weak_points()) + " weak points for " +
                        algebra.name() + " in genus " + std::to_string(curve.genus()) + ", got " +
                        std::to_string(tyurin.size()));
  }
  std::set<CurvePoint> seen;
  for (const auto& w : tyurin) {
    if (!curve.contains(w.gamma)) throw InvalidTyurin("weak point " + w.gamma.str() + " is not on the curve");
    if (w.gamma == p_plus || w.gamma == p_minus) throw InvalidTyurin("weak point " + w.gamma.str() + " coincides with P+ or P-");
    if (!seen.insert(w.gamma).second) throw InvalidTyurin("weak point " + w.gamma.str() + " repeated");
    if (static_cast<int>(w.alpha.size()) != algebra.size()) {
      throw InvalidTyurin("alpha at " + w.gamma.str() + " must have " + std::to_string(algebra.size()) + " entries");
    }
    if (algebra.kind() == AlgebraKind::so && !dot(w.alpha, w.alpha).is_zero()) {
      throw InvalidTyurin("so(n) requires alpha^t alpha = 0 at " + w.gamma.str());
    }
  }
}

AlgebraSpec AlgebraSpec::with_algebra(const AlgebraType& other) const {
  AlgebraSpec s = *this;
  s.algebra = other;
  return s;
}

}  // namespace laxwb
