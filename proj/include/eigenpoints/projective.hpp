#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "eigenpoints/scalar.hpp"

namespace eigenpoints {

constexpr double kDedupTol = 1e-8;
constexpr double kResidualTol = 1e-9;
constexpr double kRankTol = 1e-10;
constexpr double kRealTol = 1e-7;

/// A point of P^{n-1}, stored with the max-modulus coordinate scaled to 1
/// (the first such coordinate, which therefore ends up real nonnegative).
class ProjectivePoint {
public:
    ProjectivePoint() = default;

    static ProjectivePoint fromCoords(std::vector<CD> v) {
        ProjectivePoint p;
        p.coords_ = std::move(v);
        p.normalize();
        return p;
    }

    const std::vector<CD>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    int chartIndex() const { return chart_; }

    bool isReal(double tol = kRealTol) const {
        for (const CD& c : coords_)
            if (std::abs(c.imag()) > tol) return false;
        return true;
    }

    ProjectivePoint conjugate() const {
        std::vector<CD> v(coords_);
        for (CD& c : v) c = std::conj(c);
        return fromCoords(std::move(v));
    }

    /// Chordal (Fubini-Study) distance, projective-invariant in [0,1].
    /// Computed as the norm of the orthogonal rejection, which resolves
    /// distances all the way down to machine precision (1 - cos^2 would
    /// floor out near sqrt(eps)).
    double chordalDistance(const ProjectivePoint& o) const {
        double n1 = 0.0, n2 = 0.0;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            n1 += std::norm(coords_[i]);
            n2 += std::norm(o.coords_[i]);
        }
        if (n1 == 0.0 || n2 == 0.0) return (n1 == n2) ? 0.0 : 1.0;
        const double s1 = std::sqrt(n1), s2 = std::sqrt(n2);
        CD inner(0.0, 0.0);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            inner += std::conj(coords_[i] / s1) * (o.coords_[i] / s2);
        double rej = 0.0;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            rej += std::norm(o.coords_[i] / s2 - inner * (coords_[i] / s1));
        return std::min(1.0, std::sqrt(rej));
    }

    /// Max coordinate deviation after rescaling `o` into this point's chart.
    double coordDistance(const ProjectivePoint& o) const {
        if (chart_ < 0 || chart_ >= o.dim()) return 2.0;
        const CD pivot = o.coords_[chart_];
        if (std::abs(pivot) < 1e-6) return 2.0;
        double m = 0.0;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            m = std::max(m, std::abs(coords_[i] - o.coords_[i] / pivot));
        return m;
    }

    bool approxEqual(const ProjectivePoint& o, double tol = kDedupTol) const {
        return chordalDistance(o) < tol;
    }

    /// Deterministic ordering: lexicographic by rounded real, then imaginary parts.
    bool sortsBefore(const ProjectivePoint& o) const {
        auto key = [](const CD& c) {
            return std::pair<long long, long long>(llroundSafe(c.real()), llroundSafe(c.imag()));
        };
        for (std::size_t i = 0; i < coords_.size() && i < o.coords_.size(); ++i) {
            auto a = key(coords_[i]), b = key(o.coords_[i]);
            if (a != b) return a < b;
        }
        return false;
    }

private:
    static long long llroundSafe(double v) {
        const double scaled = v * 1e7;
        if (scaled > 9e17) return 900000000000000000LL;
        if (scaled < -9e17) return -900000000000000000LL;
        return std::llround(scaled);
    }

    void normalize() {
        double best = 0.0;
        for (const CD& c : coords_) best = std::max(best, std::abs(c));
        chart_ = -1;
        if (best == 0.0) return;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (std::abs(coords_[i]) >= best * (1.0 - 1e-12)) {
                chart_ = static_cast<int>(i);
                break;
            }
        }
        const CD pivot = coords_[chart_];
        for (CD& c : coords_) c /= pivot;
        coords_[chart_] = CD(1.0, 0.0);
    }

    std::vector<CD> coords_;
    int chart_ = -1;
};

/// Greedy clustering of points at the given tolerance; returns representative
/// indices and per-cluster total weight.
struct ClusterResult {
    std::vector<ProjectivePoint> representatives;
    std::vector<int> weights;
};

inline ClusterResult clusterPoints(const std::vector<ProjectivePoint>& pts, double tol = kDedupTol) {
    ClusterResult out;
    for (const auto& p : pts) {
        bool merged = false;
        for (std::size_t i = 0; i < out.representatives.size(); ++i) {
            if (out.representatives[i].approxEqual(p, tol)) {
                out.weights[i] += 1;
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.representatives.push_back(p);
            out.weights.push_back(1);
        }
    }
    return out;
}

/// Symmetric Hausdorff distance in the chordal metric.
inline double hausdorffDistance(const std::vector<ProjectivePoint>& a,
                                const std::vector<ProjectivePoint>& b) {
    if (a.empty() || b.empty()) return a.size() == b.size() ? 0.0 : 2.0;
    double h = 0.0;
    auto oneSided = [&](const std::vector<ProjectivePoint>& u, const std::vector<ProjectivePoint>& v) {
        for (const auto& p : u) {
            double dmin = 2.0;
            for (const auto& q : v) dmin = std::min(dmin, p.chordalDistance(q));
            h = std::max(h, dmin);
        }
    };
    oneSided(a, b);
    oneSided(b, a);
    return h;
}

}  // namespace eigenpoints
