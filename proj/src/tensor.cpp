#include "ybelab/tensor.hpp"

#include "ybelab/errors.hpp"

#include <string>
#include <vector>

namespace ybelab {

SiteSpace::SiteSpace(int n_, int L_) : n(n_), L(L_) {
  if (n < 2 || n > 4) throw DimensionMismatch("local dimension must be 2, 3 or 4");
  if (L < 2) throw DimensionMismatch("chain length must be at least 2");
  if (dim() > 256) throw DimensionMismatch("total dimension n^L exceeds 256");
}

int SiteSpace::dim() const {
  int d = 1;
  for (int k = 0; k < L; ++k) d *= n;
  return d;
}

CMat identity(int d) { return CMat::Identity(d, d); }

CMat kron(const CMat& A, const CMat& B) {
  CMat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

CMat kron(const CMat& A, const CMat& B, const CMat& C) { return kron(kron(A, B), C); }

CMat permutation(int n) {
  if (n < 2 || n > 4) throw DimensionMismatch("permutation: unsupported n=" + std::to_string(n));
  CMat P = CMat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(j * n + i, i * n + j) = 1.0;
  return P;
}

CMat cyclic_shift(const SiteSpace& s) {
  const int D = s.dim();
  CMat S = CMat::Zero(D, D);
  // index = sum_k d_k n^{L-1-k}, site 1 slowest
  const int top = D / s.n;
  for (int col = 0; col < D; ++col) {
    int last = col % s.n;
    int row = last * top + col / s.n;
    S(row, col) = 1.0;
  }
  return S;
}

CMat embed_pair(const CMat& h, const SiteSpace& s, int j) {
  const int n2 = s.n * s.n;
  if (h.rows() != n2 || h.cols() != n2) throw DimensionMismatch("embed_pair: h must be n^2 x n^2");
  if (j < 1 || j > s.L) throw DimensionMismatch("embed_pair: site index out of range");
  if (j < s.L) {
    int left = 1, right = 1;
    for (int k = 1; k < j; ++k) left *= s.n;
    for (int k = j + 2; k <= s.L; ++k) right *= s.n;
    return kron(identity(left), h, identity(right));
  }
  // S X S^T with S the cyclic shift, applied as an index relabelling
  CMat X = embed_pair(h, s, s.L - 1);
  const int D = s.dim(), top = D / s.n;
  std::vector<int> p(D);
  for (int col = 0; col < D; ++col) p[col] = (col % s.n) * top + col / s.n;
  CMat Y(D, D);
  for (int i = 0; i < D; ++i)
    for (int k = 0; k < D; ++k) Y(p[i], p[k]) = X(i, k);
  return Y;
}

CMat embed_two(const CMat& h, const SiteSpace& s, int a, int b) {
  const int n2 = s.n * s.n;
  if (h.rows() != n2 || h.cols() != n2) throw DimensionMismatch("embed_two: h must be n^2 x n^2");
  if (a < 1 || a > s.L || b < 1 || b > s.L || a == b) throw DimensionMismatch("embed_two: bad site pair");
  const int D = s.dim();
  std::vector<int> stride(s.L + 1);
  for (int k = 1; k <= s.L; ++k) {
    int st = 1;
    for (int q = k + 1; q <= s.L; ++q) st *= s.n;
    stride[k] = st;
  }
  CMat M = CMat::Zero(D, D);
  for (int col = 0; col < D; ++col) {
    const int da = (col / stride[a]) % s.n, db = (col / stride[b]) % s.n;
    const int base = col - da * stride[a] - db * stride[b];
    for (int ia = 0; ia < s.n; ++ia)
      for (int ib = 0; ib < s.n; ++ib) {
        cplx v = h(ia * s.n + ib, da * s.n + db);
        if (v != 0.0) M(base + ia * stride[a] + ib * stride[b], col) += v;
      }
  }
  return M;
}

CMat embed_site(const CMat& a, const SiteSpace& s, int j) {
  if (a.rows() != s.n || a.cols() != s.n) throw DimensionMismatch("embed_site: a must be n x n");
  if (j < 1 || j > s.L) throw DimensionMismatch("embed_site: site index out of range");
  int left = 1, right = 1;
  for (int k = 1; k < j; ++k) left *= s.n;
  for (int k = j + 1; k <= s.L; ++k) right *= s.n;
  return kron(identity(left), a, identity(right));
}

CMat commutator(const CMat& A, const CMat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols())
    throw DimensionMismatch("commutator: operands must be square of equal size");
  return A * B - B * A;
}

double max_norm(const CMat& A) {
  if (A.size() == 0) return 0.0;
  return A.cwiseAbs().maxCoeff();
}

CMat partial_trace_first(const CMat& M, int n) {
  if (M.rows() != M.cols() || M.rows() % n != 0) throw DimensionMismatch("partial_trace_first: bad dims");
  const Eigen::Index r = M.rows() / n;
  CMat T = CMat::Zero(r, r);
  for (int a = 0; a < n; ++a) T += M.block(a * r, a * r, r, r);
  return T;
}

CMat op12(const CMat& R, int n) { return kron(R, identity(n)); }
CMat op23(const CMat& R, int n) { return kron(identity(n), R); }
CMat op13(const CMat& R, int n) {
  CMat P23 = kron(identity(n), permutation(n));
  return P23 * op12(R, n) * P23;
}

int local_dim_of(const CMat& R) {
  for (int n = 2; n <= 4; ++n)
    if (R.rows() == n * n && R.cols() == n * n) return n;
  throw DimensionMismatch("operator is not n^2 x n^2 with n in {2,3,4}");
}

}  // namespace ybelab
