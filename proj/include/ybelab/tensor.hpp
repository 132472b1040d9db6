#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ybelab {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline constexpr cplx I_unit{0.0, 1.0};

struct SiteSpace {
  int n;
  int L;
  SiteSpace(int n_, int L_);
  int dim() const;
};

CMat identity(int d);
CMat kron(const CMat& A, const CMat& B);
CMat kron(const CMat& A, const CMat& B, const CMat& C);

// P(e_i (x) e_j) = e_j (x) e_i, n in {2,3,4}
CMat permutation(int n);

// Moves the content of site k to site k+1 (site L to site 1).
CMat cyclic_shift(const SiteSpace& s);

// h on sites (j, j+1 mod L), 1-based j
CMat embed_pair(const CMat& h, const SiteSpace& s, int j);
// h with its first factor on site a and second on site b (1-based, a != b)
CMat embed_two(const CMat& h, const SiteSpace& s, int a, int b);
CMat embed_site(const CMat& a, const SiteSpace& s, int j);

CMat commutator(const CMat& A, const CMat& B);
double max_norm(const CMat& A);

// trace over the first tensor factor of dimension n
CMat partial_trace_first(const CMat& M, int n);

// subscript realizations on (C^n)^{(x)3}
CMat op12(const CMat& R, int n);
CMat op23(const CMat& R, int n);
CMat op13(const CMat& R, int n);

int local_dim_of(const CMat& R);

}  // namespace ybelab
