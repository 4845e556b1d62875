#pragma once

// Fixed-size complex linear algebra for the 3x3 spin-1 problem.
// Everything is value-typed and allocation-free; the Hermitian eigensolver
// uses cyclic complex Jacobi rotations, which is robust and plenty fast at
// this size.

#include <array>
#include <cmath>
#include <complex>

#include "berrymag/errors.hpp"

namespace berrymag {

using Complex = std::complex<double>;

struct Vec3c {
  std::array<Complex, 3> a{};

  Complex& operator[](int i) { return a[static_cast<size_t>(i)]; }
  const Complex& operator[](int i) const { return a[static_cast<size_t>(i)]; }
};

struct Mat3c {
  // Row-major: m[row][col].
  std::array<std::array<Complex, 3>, 3> m{};

  std::array<Complex, 3>& operator[](int r) { return m[static_cast<size_t>(r)]; }
  const std::array<Complex, 3>& operator[](int r) const { return m[static_cast<size_t>(r)]; }

  static Mat3c identity() {
    Mat3c e;
    e[0][0] = e[1][1] = e[2][2] = 1.0;
    return e;
  }
};

inline Complex dot(const Vec3c& x, const Vec3c& y) {
  return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1] + std::conj(x[2]) * y[2];
}

inline double norm(const Vec3c& x) { return std::sqrt(std::real(dot(x, x))); }

inline Vec3c scale(const Vec3c& x, Complex c) {
  return Vec3c{{c * x[0], c * x[1], c * x[2]}};
}

inline Vec3c sub(const Vec3c& x, const Vec3c& y) {
  return Vec3c{{x[0] - y[0], x[1] - y[1], x[2] - y[2]}};
}

inline Vec3c matvec(const Mat3c& A, const Vec3c& x) {
  Vec3c y;
  for (int r = 0; r < 3; ++r)
    y[r] = A[r][0] * x[0] + A[r][1] * x[1] + A[r][2] * x[2];
  return y;
}

inline Mat3c matmul(const Mat3c& A, const Mat3c& B) {
  Mat3c C;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      C[r][c] = A[r][0] * B[0][c] + A[r][1] * B[1][c] + A[r][2] * B[2][c];
  return C;
}

inline Mat3c adjoint(const Mat3c& A) {
  Mat3c B;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      B[r][c] = std::conj(A[c][r]);
  return B;
}

inline double frobenius_norm(const Mat3c& A) {
  double s = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      s += std::norm(A[r][c]);
  return std::sqrt(s);
}

inline double hermiticity_defect(const Mat3c& A) {
  double d = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      d = std::max(d, std::abs(A[r][c] - std::conj(A[c][r])));
  return d;
}

struct Eig3 {
  std::array<double, 3> values{};   // unsorted (Jacobi output order)
  std::array<Vec3c, 3> vectors{};   // vectors[i] pairs with values[i]
};

// Cyclic complex Jacobi for a 3x3 Hermitian matrix. Converges to an
// off-diagonal norm of <= tol * ||A||_F. Eigenvectors come out orthonormal
// because they are columns of an accumulated product of unitaries.
inline Eig3 hermitian_eig3(const Mat3c& A_in, double tol = 1e-15) {
  Mat3c A = A_in;
  // Symmetrize once: removes ~1 ulp asymmetry from the caller's assembly.
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      A[r][c] = 0.5 * (A[r][c] + std::conj(A_in[c][r]));

  Mat3c V = Mat3c::identity();
  const double scale = std::max(frobenius_norm(A), 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = std::sqrt(std::norm(A[0][1]) + std::norm(A[0][2]) + std::norm(A[1][2]));
    if (off <= tol * scale) break;

    static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pq : pairs) {
      const int p = pq[0], q = pq[1];
      const double apq = std::abs(A[p][q]);
      if (apq <= 1e-300) continue;

      // Unitary 2x2 rotation U = [[c, -s*e^{i*b}], [s*e^{-i*b}, c]] with
      // b = arg(A[p][q]) zeroes the (p,q) element; the real rotation angle
      // follows the classic stable tan(2θ) form.
      const Complex phase = A[p][q] / apq;
      const double tau = (std::real(A[p][p]) - std::real(A[q][q])) / (2.0 * apq);
      double t;
      if (std::abs(tau) > 1e150) {
        t = 1.0 / (2.0 * tau);
      } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const Complex w = s * phase;  // off-diagonal entry of U

      // A <- U^dagger A U, applied as row and column updates.
      for (int k = 0; k < 3; ++k) {
        const Complex akp = A[k][p], akq = A[k][q];
        A[k][p] = c * akp + std::conj(w) * akq;
        A[k][q] = -w * akp + c * akq;
      }
      for (int k = 0; k < 3; ++k) {
        const Complex apk = A[p][k], aqk = A[q][k];
        A[p][k] = c * apk + w * aqk;
        A[q][k] = -std::conj(w) * apk + c * aqk;
      }
      A[p][q] = 0.0;
      A[q][p] = 0.0;
      A[p][p] = std::real(A[p][p]);
      A[q][q] = std::real(A[q][q]);

      for (int k = 0; k < 3; ++k) {
        const Complex vkp = V[k][p], vkq = V[k][q];
        V[k][p] = c * vkp + std::conj(w) * vkq;
        V[k][q] = -w * vkp + c * vkq;
      }
    }
  }

  Eig3 out;
  for (int i = 0; i < 3; ++i) {
    out.values[static_cast<size_t>(i)] = std::real(A[i][i]);
    for (int r = 0; r < 3; ++r) out.vectors[static_cast<size_t>(i)][r] = V[r][i];
  }
  return out;
}

}  // namespace berrymag
