#include "eigenpoints/eigensys.hpp"

#include <numbers>
#include <stdexcept>

namespace eigenpoints {

namespace {

// Iterate all multi-indices (i_1..i_d) in row-major order.
template <class F>
void forEachIndex(int n, int d, F&& f) {
    std::vector<int> idx(d, 0);
    while (true) {
        f(idx);
        int pos = d - 1;
        while (pos >= 0) {
            if (++idx[pos] < n) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

template <class K>
K multinomialInverseScale(const std::vector<int>& exps, int d);

template <>
Rat multinomialInverseScale<Rat>(const std::vector<int>& exps, int d) {
    BigInt den = factorial(d);
    BigInt num = 1;
    for (int e : exps) num *= factorial(e);
    return Rat(num) / Rat(den);
}

template <>
CD multinomialInverseScale<CD>(const std::vector<int>& exps, int d) {
    return toComplex(multinomialInverseScale<Rat>(exps, d));
}

}  // namespace

template <class K>
bool Tensor<K>::isSymmetric() const {
    bool ok = true;
    forEachIndex(n, d, [&](const std::vector<int>& idx) {
        if (!ok) return;
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != idx && !(at(idx) == at(sorted))) ok = false;
    });
    return ok;
}

template bool Tensor<Rat>::isSymmetric() const;
template bool Tensor<CD>::isSymmetric() const;

TensorQ rationalizeTensor(const TensorC& t) {
    TensorQ r(t.n, t.d);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (t.entries[i].imag() != 0.0)
            throw std::invalid_argument("rationalizeTensor: complex entry");
        r.entries[i] = ratFromDouble(t.entries[i].real());
    }
    return r;
}

template <class K>
std::vector<Poly<K>> psiMap(const Tensor<K>& a, int k) {
    if (k < 1 || k > a.d) throw std::invalid_argument("psiMap: slot out of range");
    std::vector<Poly<K>> psi(a.n, Poly<K>(a.n));
    const int slot = k - 1;
    forEachIndex(a.n, a.d, [&](const std::vector<int>& idx) {
        const K& c = a.at(idx);
        if (ScalarOps<K>::isZero(c)) return;
        std::vector<int> e(a.n, 0);
        for (int m = 0; m < a.d; ++m)
            if (m != slot) e[idx[m]] += 1;
        psi[idx[slot]].addTerm(e, c);
    });
    return psi;
}

template std::vector<Poly<Rat>> psiMap(const Tensor<Rat>&, int);
template std::vector<Poly<CD>> psiMap(const Tensor<CD>&, int);

namespace {

template <class K>
EigenSystem<K> systemFromPsi(std::vector<Poly<K>> psi, int n, int ell, int k) {
    EigenSystem<K> sys;
    sys.n = n;
    sys.ell = ell;
    sys.k = k;
    sys.psi = std::move(psi);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Poly<K> xi = Poly<K>::variable(i, n);
            const Poly<K> xj = Poly<K>::variable(j, n);
            sys.minors.push_back(xi.pow(ell) * sys.psi[j] - xj.pow(ell) * sys.psi[i]);
            sys.pairs.emplace_back(i, j);
        }
    }
    return sys;
}

}  // namespace

template <class K>
EigenSystem<K> eigenSystem(const Tensor<K>& a, int ell, int k) {
    if (ell < 1) throw std::invalid_argument("eigenSystem: ell >= 1 required");
    return systemFromPsi(psiMap(a, k), a.n, ell, k);
}

template EigenSystem<Rat> eigenSystem(const Tensor<Rat>&, int, int);
template EigenSystem<CD> eigenSystem(const Tensor<CD>&, int, int);

template <class K>
EigenSystem<K> eigenSystemFromForm(const Poly<K>& phi, int ell) {
    if (ell < 1) throw std::invalid_argument("eigenSystemFromForm: ell >= 1 required");
    if (!phi.isHomogeneous()) throw std::invalid_argument("eigenSystemFromForm: not homogeneous");
    std::vector<Poly<K>> psi;
    for (int i = 0; i < phi.numVars(); ++i) psi.push_back(phi.partialDerivative(i));
    return systemFromPsi(std::move(psi), phi.numVars(), ell, 1);
}

template EigenSystem<Rat> eigenSystemFromForm(const Poly<Rat>&, int);
template EigenSystem<CD> eigenSystemFromForm(const Poly<CD>&, int);

template <class K>
Tensor<K> tensorFromForm(const Poly<K>& phi) {
    if (!phi.isHomogeneous() || phi.isZero())
        throw std::invalid_argument("tensorFromForm: nonzero homogeneous form required");
    const int n = phi.numVars();
    const int d = phi.degree();
    Tensor<K> a(n, d);
    forEachIndex(n, d, [&](const std::vector<int>& idx) {
        std::vector<int> e(n, 0);
        for (int i : idx) e[i] += 1;
        const K c = phi.coeff(e);
        if (ScalarOps<K>::isZero(c)) return;
        a.at(idx) = c * multinomialInverseScale<K>(e, d);
    });
    return a;
}

template Tensor<Rat> tensorFromForm(const Poly<Rat>&);
template Tensor<CD> tensorFromForm(const Poly<CD>&);

template <class K>
Poly<K> formFromSymmetricTensor(const Tensor<K>& a) {
    if (!a.isSymmetric()) throw std::invalid_argument("formFromSymmetricTensor: tensor not symmetric");
    Poly<K> phi(a.n);
    forEachIndex(a.n, a.d, [&](const std::vector<int>& idx) {
        const K& c = a.at(idx);
        if (ScalarOps<K>::isZero(c)) return;
        std::vector<int> e(a.n, 0);
        for (int i : idx) e[i] += 1;
        phi.addTerm(e, c);
    });
    return phi;
}

template Poly<Rat> formFromSymmetricTensor(const Tensor<Rat>&);
template Poly<CD> formFromSymmetricTensor(const Tensor<CD>&);

std::vector<ProjectivePoint> fermatEigenpoints(int n, int d) {
    if (d < 3)
        throw std::invalid_argument(
            "fermatEigenpoints: d >= 3 required (d = 2 is the matrix case: basis vectors)");
    const int r = d - 2;  // support coordinates run over r-th roots of unity
    std::vector<CD> roots(r);
    for (int m = 0; m < r; ++m) {
        const double t = 2.0 * std::numbers::pi * m / r;
        roots[m] = (r == 1)   ? CD(1, 0)
                   : (r == 2) ? CD(m == 0 ? 1 : -1, 0)
                              : CD(std::cos(t), std::sin(t));
        if (r == 4) roots[m] = CD((m == 0) ? 1 : (m == 2) ? -1 : 0, (m == 1) ? 1 : (m == 3) ? -1 : 0);
    }
    std::vector<ProjectivePoint> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) support.push_back(i);
        const int free = static_cast<int>(support.size()) - 1;
        std::vector<int> choice(free, 0);
        while (true) {
            std::vector<CD> coords(n, CD(0, 0));
            coords[support[0]] = CD(1, 0);
            for (int t = 0; t < free; ++t) coords[support[t + 1]] = roots[choice[t]];
            out.push_back(ProjectivePoint::fromCoords(std::move(coords)));
            int pos = free - 1;
            while (pos >= 0) {
                if (++choice[pos] < r) break;
                choice[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

}  // namespace eigenpoints
