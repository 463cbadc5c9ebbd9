#pragma once

#include <vector>

#include "eigenpoints/polynomial.hpp"
#include "eigenpoints/projective.hpp"

namespace eigenpoints {

/// Dense order-d tensor of format n x n x ... x n. Entries are stored
/// row-major: index (i_1,...,i_d) sits at sum_k i_k n^{d-k} (0-based).
template <class K>
struct Tensor {
    int n = 0, d = 0;
    std::vector<K> entries;

    Tensor() = default;
    Tensor(int n_, int d_) : n(n_), d(d_), entries(flatSize(n_, d_), K{}) {}

    static std::size_t flatSize(int n, int d) {
        std::size_t s = 1;
        for (int i = 0; i < d; ++i) s *= static_cast<std::size_t>(n);
        return s;
    }

    std::size_t flatIndex(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (int i : idx) f = f * n + static_cast<std::size_t>(i);
        return f;
    }

    K& at(const std::vector<int>& idx) { return entries[flatIndex(idx)]; }
    const K& at(const std::vector<int>& idx) const { return entries[flatIndex(idx)]; }

    bool isSymmetric() const;

    Tensor operator+(const Tensor& o) const {
        Tensor r = *this;
        for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
        return r;
    }
};

using TensorQ = Tensor<Rat>;
using TensorC = Tensor<CD>;

inline TensorC toComplexTensor(const TensorQ& t) {
    TensorC r(t.n, t.d);
    for (std::size_t i = 0; i < t.entries.size(); ++i) r.entries[i] = toComplex(t.entries[i]);
    return r;
}

/// Exact rationalization; requires all entries real.
TensorQ rationalizeTensor(const TensorC& t);

/// The map psi^[k] defined by slot k of the tensor (k is 1-based):
/// psi^[k]_i = sum over index tuples with slot k equal to i of
/// a_{j_1..i..j_d} x_{j_1}...x_{j_d} (slot k omitted). Degree d-1 forms.
template <class K>
std::vector<Poly<K>> psiMap(const Tensor<K>& a, int k = 1);

/// The determinantal eigenpoint system: the C(n,2) minors
/// x_i^ell psi_j - x_j^ell psi_i, i < j, of degree ell + d - 1.
template <class K>
struct EigenSystem {
    int n = 0, ell = 1, k = 1;
    std::vector<Poly<K>> psi;
    std::vector<Poly<K>> minors;               // one per pair, same order as `pairs`
    std::vector<std::pair<int, int>> pairs;    // 0-based (i, j), i < j
};

template <class K>
EigenSystem<K> eigenSystem(const Tensor<K>& a, int ell = 1, int k = 1);

/// Eigen system of a symmetric tensor given as a form: psi_j = d(phi)/d(x_j).
template <class K>
EigenSystem<K> eigenSystemFromForm(const Poly<K>& phi, int ell = 1);

/// Symmetric tensor <-> homogeneous form. The tensor entry at a multi-index
/// with exponent pattern e is coeff(phi, e) divided by the multinomial
/// d!/(e_1!...e_n!), so that phi(x) = sum a_{i_1..i_d} x_{i_1}...x_{i_d}.
template <class K>
Tensor<K> tensorFromForm(const Poly<K>& phi);

template <class K>
Poly<K> formFromSymmetricTensor(const Tensor<K>& a);

/// Eigenpoints of the Fermat form x_1^d + ... + x_n^d, enumerated by support:
/// smallest-index support coordinate 1, remaining support coordinates
/// arbitrary (d-2)-th roots of unity. Requires d >= 3.
std::vector<ProjectivePoint> fermatEigenpoints(int n, int d);

}  // namespace eigenpoints
