#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// touches the library's Cayley tables: groups are concrete element sets
// (permutations, quaternion units, integer matrices) closed under
// multiplication, and every count is done directly on those elements.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t phi(std::uint64_t k) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= k; ++i)
    if (std::gcd(i, k) == 1) ++c;
  return c;
}

/// Closure of a generating set under multiplication.
template <typename T>
std::vector<T> closure(const T& identity, const std::vector<T>& gens) {
  std::set<T> seen{identity};
  std::vector<T> frontier{identity};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier)
      for (const T& g : gens) {
        T y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

template <typename T>
std::size_t order_of(const T& x, const T& identity) {
  T p = x;
  std::size_t k = 1;
  while (!(p == identity)) {
    p = p * x;
    ++k;
  }
  return k;
}

template <typename T>
std::size_t cyclic_subgroup_count(const std::vector<T>& elems, const T& identity) {
  std::set<std::set<T>> subgroups;
  for (const T& x : elems) {
    std::set<T> s{identity};
    for (T p = x; !(p == identity); p = p * x) s.insert(p);
    subgroups.insert(std::move(s));
  }
  return subgroups.size();
}

template <typename T>
std::vector<T> center(const std::vector<T>& elems) {
  std::vector<T> z;
  for (const T& c : elems) {
    bool central = true;
    for (const T& x : elems) central = central && (c * x == x * c);
    if (central) z.push_back(c);
  }
  return z;
}

template <typename T>
std::map<std::size_t, std::size_t> order_histogram(const std::vector<T>& elems, const T& identity) {
  std::map<std::size_t, std::size_t> h;
  for (const T& x : elems) ++h[order_of(x, identity)];
  return h;
}

// ---------------------------------------------------------------------------
// Element types

struct Perm {
  std::vector<int> img;
  Perm operator*(const Perm& o) const {  // apply o first
    Perm r{std::vector<int>(img.size())};
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = img[o.img[i]];
    return r;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

inline Perm perm_identity(int k) {
  Perm p{std::vector<int>(k)};
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

/// Unit quaternions {+-1, +-i, +-j, +-k}: sign and basis index 0..3.
struct Quat {
  int sign = 1;
  int basis = 0;  // 0 = 1, 1 = i, 2 = j, 3 = k
  Quat operator*(const Quat& o) const {
    // table[a][b] = (sign, basis) of e_a * e_b
    static const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int b[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return {sign * o.sign * s[basis][o.basis], b[basis][o.basis]};
  }
  bool operator==(const Quat& o) const { return sign == o.sign && basis == o.basis; }
  bool operator<(const Quat& o) const { return std::pair(sign, basis) < std::pair(o.sign, o.basis); }
};

/// Square matrix over the Gaussian integers with a fixed dimension, or over
/// Z_p when `mod` is nonzero (real parts only).
struct Mat {
  int dim = 2;
  long long mod = 0;
  std::vector<std::complex<long long>> a;
  Mat operator*(const Mat& o) const {
    Mat r{dim, mod, std::vector<std::complex<long long>>(dim * dim)};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        std::complex<long long> s = 0;
        for (int t = 0; t < dim; ++t) s += a[i * dim + t] * o.a[t * dim + j];
        if (mod) s = {((s.real() % mod) + mod) % mod, 0};
        r.a[i * dim + j] = s;
      }
    return r;
  }
  bool operator==(const Mat& o) const { return a == o.a; }
  bool operator<(const Mat& o) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != o.a[i].real()) return a[i].real() < o.a[i].real();
      if (a[i].imag() != o.a[i].imag()) return a[i].imag() < o.a[i].imag();
    }
    return false;
  }
};

inline Mat mat(int dim, std::vector<std::complex<long long>> entries, long long mod = 0) {
  return Mat{dim, mod, std::move(entries)};
}

// Kronecker product of two Gaussian-integer matrices.
inline Mat kron(const Mat& x, const Mat& y) {
  const int d = x.dim * y.dim;
  Mat r{d, 0, std::vector<std::complex<long long>>(d * d)};
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j)
      for (int k = 0; k < y.dim; ++k)
        for (int l = 0; l < y.dim; ++l)
          r.a[(i * y.dim + k) * d + (j * y.dim + l)] = x.a[i * x.dim + j] * y.a[k * y.dim + l];
  return r;
}

inline Mat identity_mat(int dim) {
  Mat r{dim, 0, std::vector<std::complex<long long>>(dim * dim)};
  for (int i = 0; i < dim; ++i) r.a[i * dim + i] = 1;
  return r;
}

// ---------------------------------------------------------------------------
// Reference groups

/// Symmetries of a regular n-gon as vertex permutations.
inline std::vector<Perm> dihedral(int n) {
  Perm r{std::vector<int>(n)}, s{std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    r.img[i] = (i + 1) % n;
    s.img[i] = (n - i) % n;
  }
  return closure(perm_identity(n), {r, s});
}

inline std::vector<Perm> symmetric(int k) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < k; ++i) {
    Perm t = perm_identity(k);
    std::swap(t.img[i], t.img[i + 1]);
    gens.push_back(t);
  }
  return closure(perm_identity(k), gens);
}

inline std::vector<Quat> quaternion8() { return closure(Quat{}, {Quat{1, 1}, Quat{1, 2}}); }

inline const Mat& pauli_x() { static const Mat m = mat(2, {0, 1, 1, 0}); return m; }
inline const Mat& pauli_z() { static const Mat m = mat(2, {1, 0, 0, -1}); return m; }

/// The n-qubit Pauli group <iI, X_j, Z_j>: almost extraspecial of order
/// 2^(2n+2) with center {+-1, +-i}.
inline std::vector<Mat> pauli_group(int qubits) {
  const int dim = 1 << qubits;
  Mat scalar_i = identity_mat(dim);
  for (auto& e : scalar_i.a) e *= std::complex<long long>(0, 1);
  std::vector<Mat> gens{scalar_i};
  for (int q = 0; q < qubits; ++q)
    for (const Mat* m : {&pauli_x(), &pauli_z()}) {
      Mat r = q == 0 ? *m : identity_mat(2);
      for (int t = 1; t < qubits; ++t) r = kron(r, t == q ? *m : identity_mat(2));
      gens.push_back(r);
    }
  return closure(identity_mat(dim), gens);
}

/// Real Pauli group <X_j, Z_j> on n qubits: extraspecial of order 2^(1+2n),
/// plus type.
inline std::vector<Mat> real_pauli_group(int qubits) {
  std::vector<Mat> gens;
  for (int q = 0; q < qubits; ++q) {
    for (const Mat* m : {&pauli_x(), &pauli_z()}) {
      Mat r = q == 0 ? *m : identity_mat(2);
      for (int t = 1; t < qubits; ++t) r = kron(r, t == q ? *m : identity_mat(2));
      gens.push_back(r);
    }
  }
  return closure(identity_mat(1 << qubits), gens);
}

/// Upper unitriangular 3x3 matrices over Z_p.
inline std::vector<Mat> heisenberg(long long p) {
  auto m = [&](long long a, long long b, long long c) {
    return mat(3, {1, a, c, 0, 1, b, 0, 0, 1}, p);
  };
  return closure(mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}, p), {m(1, 0, 0), m(0, 1, 0)});
}

}  // namespace oracle
