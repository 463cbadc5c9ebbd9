#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "eigenpoints/scalar.hpp"

namespace eigenpoints {

/// Sparse multivariate polynomial over K (exact rationals or complex doubles).
/// Terms map exponent vectors to nonzero coefficients; zero coefficients are
/// never stored. Homogeneity is a property of the data, not the type: the
/// modules that require forms check it at their boundaries.
template <class K>
class Poly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, K>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const K& c) {
        Poly p(nvars);
        p.addTerm(Exps(nvars, 0), c);
        return p;
    }

    static Poly variable(int i, int nvars) {
        Poly p(nvars);
        Exps e(nvars, 0);
        e[i] = 1;
        p.addTerm(e, ScalarOps<K>::fromInt(1));
        return p;
    }

    static Poly monomial(const Exps& e, const K& c) {
        Poly p(static_cast<int>(e.size()));
        p.addTerm(e, c);
        return p;
    }

    int numVars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    bool isHomogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = std::accumulate(e.begin(), e.end(), 0);
            if (d == -2) d = s;
            else if (s != d) return false;
        }
        return true;
    }

    int degreeIn(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void addTerm(const Exps& e, const K& c) {
        assert(static_cast<int>(e.size()) == nvars_);
        if (ScalarOps<K>::isZero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (ScalarOps<K>::isZero(it->second)) terms_.erase(it);
        }
    }

    K coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.addTerm(e, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exps e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.addTerm(e, c1 * c2);
            }
        }
        return r;
    }

    Poly operator*(const K& s) const {
        Poly r(nvars_);
        if (ScalarOps<K>::isZero(s)) return r;
        for (const auto& [e, c] : terms_) r.addTerm(e, c * s);
        return r;
    }

    Poly pow(int k) const {
        assert(k >= 0);
        Poly r = constant(nvars_, ScalarOps<K>::fromInt(1));
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Poly partialDerivative(int var) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exps e2 = e;
            e2[var] -= 1;
            r.addTerm(e2, c * ScalarOps<K>::fromInt(e[var]));
        }
        return r;
    }

    K evaluate(std::span<const K> x) const {
        assert(static_cast<int>(x.size()) == nvars_);
        K acc{};
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int p = 0; p < e[i]; ++p) t *= x[i];
            acc += t;
        }
        return acc;
    }

    K evaluate(const std::vector<K>& x) const { return evaluate(std::span<const K>(x)); }

    /// Substitute args[i] for variable i (polynomial composition).
    Poly substitute(std::span<const Poly> args) const {
        assert(static_cast<int>(args.size()) == nvars_);
        int outVars = args.empty() ? nvars_ : args[0].numVars();
        Poly r(outVars);
        for (const auto& [e, c] : terms_) {
            Poly t = constant(outVars, c);
            for (int i = 0; i < nvars_; ++i)
                if (e[i] > 0) t = t * args[i].pow(e[i]);
            r = r + t;
        }
        return r;
    }

    /// Set variable `var` to 1. Keeps the variable count; its exponents drop to 0.
    Poly setVarToOne(int var) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[var] = 0;
            r.addTerm(e2, c);
        }
        return r;
    }

    /// Set variable `var` to 0.
    Poly setVarToZero(int var) const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != 0) continue;
            r.addTerm(e, c);
        }
        return r;
    }

    double maxAbsCoeff() const {
        double m = 0.0;
        for (const auto& [e, c] : terms_) m = std::max(m, ScalarOps<K>::absValue(c));
        return m;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    int nvars_;
    TermMap terms_;
};

using PolyQ = Poly<Rat>;
using PolyC = Poly<CD>;

inline PolyC toComplexPoly(const PolyQ& p) {
    PolyC r(p.numVars());
    for (const auto& [e, c] : p.terms()) r.addTerm(e, toComplex(c));
    return r;
}

/// Exact rationalization. Requires all coefficients real (imaginary part 0).
inline PolyQ rationalizePoly(const PolyC& p) {
    PolyQ r(p.numVars());
    for (const auto& [e, c] : p.terms()) {
        if (c.imag() != 0.0) throw std::invalid_argument("rationalizePoly: complex coefficient");
        r.addTerm(e, ratFromDouble(c.real()));
    }
    return r;
}

/// Monomial exponent vectors of total degree d in n variables, graded-lex
/// (power of the first variable descending). For n=2, d=3 this is
/// s^3, s^2 t, s t^2, t^3.
inline std::vector<std::vector<int>> monomialsOfDegree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (n > 0) rec(rec, 0, d);
    return out;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials, coefficients ascending: c[0] + c[1] x + ...
// ---------------------------------------------------------------------------

template <class K>
struct UniPoly {
    std::vector<K> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && ScalarOps<K>::isZero(c.back())) c.pop_back();
    }

    bool isZero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    K eval(const K& x) const {
        K acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c.size() <= 1) return UniPoly();
        std::vector<K> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            d[i - 1] = c[i] * ScalarOps<K>::fromInt(static_cast<long long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly operator*(const UniPoly& o) const {
        if (isZero() || o.isZero()) return UniPoly();
        std::vector<K> r(c.size() + o.c.size() - 1, K{});
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return UniPoly(std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> r(std::max(c.size(), o.c.size()), K{});
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const {
        std::vector<K> r(std::max(c.size(), o.c.size()), K{});
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator*(const K& s) const {
        UniPoly r = *this;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
};

using UniQ = UniPoly<Rat>;
using UniC = UniPoly<CD>;

inline UniC toComplexUni(const UniQ& p) {
    std::vector<CD> c(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = toComplex(p.c[i]);
    return UniC(std::move(c));
}

/// Extract a univariate view of a polynomial that involves only variable `var`.
template <class K>
UniPoly<K> toUnivariate(const Poly<K>& p, int var) {
    std::vector<K> c(static_cast<std::size_t>(std::max(0, p.degreeIn(var))) + 1, K{});
    for (const auto& [e, coef] : p.terms()) {
        for (int i = 0; i < p.numVars(); ++i)
            if (i != var && e[i] != 0)
                throw std::invalid_argument("toUnivariate: polynomial involves another variable");
        c[e[var]] += coef;
    }
    UniPoly<K> r(std::move(c));
    return r;
}

/// Exact polynomial division over a field; throws if not divisible.
template <class K>
UniPoly<K> divideExact(const UniPoly<K>& num, const UniPoly<K>& den) {
    if (den.isZero()) throw std::invalid_argument("divideExact: zero divisor");
    std::vector<K> rem = num.c;
    if (num.degree() < den.degree()) {
        if (num.isZero()) return UniPoly<K>();
        throw std::invalid_argument("divideExact: not divisible");
    }
    std::vector<K> quo(num.degree() - den.degree() + 1, K{});
    for (int i = num.degree(); i >= den.degree(); --i) {
        K q = rem[i] / den.c.back();
        quo[i - den.degree()] = q;
        if (!ScalarOps<K>::isZero(q))
            for (int j = 0; j <= den.degree(); ++j) rem[i - den.degree() + j] -= q * den.c[j];
    }
    UniPoly<K> r(std::move(rem));
    if (!r.isZero()) throw std::invalid_argument("divideExact: nonzero remainder");
    return UniPoly<K>(std::move(quo));
}

/// Monic gcd over the rationals.
inline UniQ gcdUni(UniQ a, UniQ b) {
    auto makeMonic = [](UniQ& p) {
        if (!p.isZero()) {
            Rat lc = p.c.back();
            for (auto& x : p.c) x /= lc;
        }
    };
    while (!b.isZero()) {
        // remainder of a by b
        UniQ r = a;
        while (!r.isZero() && r.degree() >= b.degree()) {
            Rat q = r.c.back() / b.c.back();
            int shift = r.degree() - b.degree();
            for (int j = 0; j <= b.degree(); ++j) r.c[shift + j] -= q * b.c[j];
            r.trim();
        }
        a = b;
        b = r;
    }
    makeMonic(a);
    return a;
}

}  // namespace eigenpoints
