#include "jforge/foliate/formal.hpp"

#include <Eigen/LU>

#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

namespace {

template <class T>
void check_shape(const ContactData& C, const Mat<T>& L) {
  if (L.cols() != C.dim()) throw DomainError("linear map has the wrong number of columns");
  if (L.rows() % 2) throw DomainError("target dimension must be even");
  if (L.rows() >= C.dim()) throw DomainError("target dimension must be below the source dimension");
}

template <class T>
void values_at(const ContactData& C, const Point<T>& x, Vec<T>* a, Mat<T>* W) {
  const int n = C.dim();
  Vec<ScalarField> ac = components(C.alpha());
  a->resize(n);
  W->resize(n, n);
  for (int i = 0; i < n; ++i) {
    (*a)(i) = ac(i).template evaluate<T>(x);
    for (int j = 0; j < n; ++j) (*W)(i, j) = C.d_alpha_matrix()(i, j).template evaluate<T>(x);
  }
}

}  // namespace

FormalSolution formal_solution_check(const ContactData& C, const Mat<Rational>& L, const Point<Rational>& x) {
  check_shape(C, L);
  const int n = C.dim(), m = static_cast<int>(L.rows());
  Vec<Rational> a;
  Mat<Rational> W;
  values_at(C, x, &a, &W);
  FormalSolution r;
  r.surjective = rank_exact(L) == m;
  Mat<Rational> S(m + 1, n);
  S.topRows(m) = L;
  S.row(m) = a.transpose();
  Mat<Rational> K = nullspace_exact(S);
  r.intersection_dim = static_cast<int>(K.cols());
  if (!r.surjective || r.intersection_dim != n - m - 1) return r;
  Mat<Rational> P = K.transpose() * W * K;
  r.symplectic = !pfaffian(P).is_zero();
  return r;
}

FormalSolution formal_solution_check(const ContactData& C, const Mat<long double>& L,
                                     const Point<long double>& x) {
  check_shape(C, L);
  constexpr long double tol = 1e-9L;
  const int n = C.dim(), m = static_cast<int>(L.rows());
  Vec<long double> a;
  Mat<long double> W;
  values_at(C, x, &a, &W);
  FormalSolution r;
  Eigen::FullPivLU<Mat<long double>> lu(L);
  lu.setThreshold(tol);
  r.surjective = m == 0 || lu.rank() == m;
  Mat<long double> S(m + 1, n);
  S.topRows(m) = L;
  S.row(m) = a.transpose();
  Eigen::FullPivLU<Mat<long double>> slu(S);
  slu.setThreshold(tol);
  Mat<long double> K = slu.kernel();
  r.intersection_dim = n - static_cast<int>(slu.rank());
  if (!r.surjective || r.intersection_dim != n - m - 1) return r;
  if (r.intersection_dim == 0) {
    r.symplectic = true;  // kernel() returns a zero column here
    return r;
  }
  Mat<long double> P = K.transpose() * W * K;
  Eigen::FullPivLU<Mat<long double>> plu(P);
  plu.setThreshold(tol);
  r.symplectic = plu.rank() == P.rows();
  return r;
}

std::vector<bool> map_transversality_report(const ContactData& C, const PolyMap& f, Samples samples) {
  if (!compatible(f.source(), C.chart())) throw ChartMismatch();
  Mat<ScalarField> J = f.jacobian();
  std::vector<bool> out;
  for (const Point<Rational>& p : samples) {
    Mat<Rational> L(J.rows(), J.cols());
    for (int i = 0; i < J.rows(); ++i)
      for (int j = 0; j < J.cols(); ++j) L(i, j) = J(i, j).evaluate<Rational>(p);
    out.push_back(formal_solution_check(C, L, p).ok());
  }
  return out;
}

}  // namespace jforge
