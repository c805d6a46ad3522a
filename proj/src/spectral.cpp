#include "twinwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "twinwalk/error.hpp"

namespace twinwalk {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRelTol = 1e-13;
constexpr int kTaylorDegree = 18;

double off_diagonal_norm(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::hypot(t, 1.0);
    const double s = t * c;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigenPairs jacobi_eigen(const SymmetricMatrix& input) {
    const std::size_t n = input.size();
    RealMatrix a = input.dense();
    RealMatrix v = RealMatrix::identity(n);
    const double threshold = kOffDiagonalRelTol * input.frobenius_norm();

    int sweeps = 0;
    for (double off = off_diagonal_norm(a); off > 0.0 && off >= threshold; off = off_diagonal_norm(a)) {
        if (sweeps == kMaxSweeps) {
            throw Error(ErrorCode::ConvergenceFailure,
                        "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenPairs out;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors = RealMatrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

double Spectrum::spectral_radius() const {
    double r = 0.0;
    for (double mu : values) r = std::max(r, std::abs(mu));
    return r;
}

Spectrum eigendecompose(const SymmetricMatrix& l, double cluster_tol) {
    if (!(cluster_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "cluster_tol must be positive");
    const std::size_t n = l.size();
    const EigenPairs raw = jacobi_eigen(l);
    const double gap = cluster_tol * std::max(1.0, l.frobenius_norm());

    Spectrum s;
    s.n = n;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && raw.values[end] - raw.values[end - 1] <= gap) ++end;

        double mean = 0.0;
        SymmetricMatrix proj(n);
        for (std::size_t c = start; c < end; ++c) {
            mean += raw.values[c];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j)
                    proj.add(i, j, raw.vectors(i, c) * raw.vectors(j, c));
        }
        s.values.push_back(mean / static_cast<double>(end - start));
        s.projectors.push_back(std::move(proj));
        s.multiplicities.push_back(end - start);
        start = end;
    }

    // Orthonormal eigenvectors imply idempotent, mutually orthogonal
    // projectors; checking the Gram matrix is O(n^3) instead of O(k^2 n^3).
    RealMatrix gram(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t r = 0; r < n; ++r) dot += raw.vectors(r, i) * raw.vectors(r, j);
            gram(i, j) = dot;
        }
    SpectrumDefects cheap;
    {
        SymmetricMatrix sum(n), recon(n);
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            sum += s.projectors[j];
            recon += s.values[j] * s.projectors[j];
        }
        cheap.completeness = max_abs_diff(sum.dense(), RealMatrix::identity(n));
        cheap.reconstruction = max_abs_diff(recon.dense(), l.dense());
    }
    if (max_abs_diff(gram, RealMatrix::identity(n)) > 1e-10 || cheap.completeness > 1e-9 ||
        cheap.reconstruction > 1e-8 * std::max(1.0, s.spectral_radius())) {
        throw Error(ErrorCode::ConvergenceFailure, "spectral decomposition failed its invariants");
    }
    return s;
}

SpectrumDefects spectrum_defects(const Spectrum& s, const SymmetricMatrix& source) {
    const std::size_t n = s.n;
    SpectrumDefects d;
    std::vector<RealMatrix> dense;
    dense.reserve(s.projectors.size());
    for (const auto& e : s.projectors) dense.push_back(e.dense());

    RealMatrix sum(n), recon(n);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        d.idempotency = std::max(d.idempotency, max_abs_diff(dense[i] * dense[i], dense[i]));
        for (std::size_t j = 0; j < dense.size(); ++j) {
            if (i != j) d.orthogonality = std::max(d.orthogonality, max_abs(dense[i] * dense[j]));
        }
        sum += dense[i];
        recon += s.values[i] * dense[i];
    }
    d.completeness = max_abs_diff(sum, RealMatrix::identity(n));
    d.reconstruction = max_abs_diff(recon, source.dense());
    return d;
}

bool spectrum_invariants_hold(const Spectrum& s, const SymmetricMatrix& source) {
    const auto d = spectrum_defects(s, source);
    return d.idempotency < 1e-9 && d.orthogonality < 1e-9 && d.completeness < 1e-9 &&
           d.reconstruction < 1e-8 * std::max(1.0, s.spectral_radius());
}

bool is_integral_spectrum(const Spectrum& s, double int_tol) {
    if (!(int_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "int_tol must be positive");
    return std::all_of(s.values.begin(), s.values.end(),
                       [&](double mu) { return std::abs(mu - std::round(mu)) <= int_tol; });
}

ComplexMatrix matrix_exp_oracle(const SymmetricMatrix& h, double t) {
    const std::size_t n = h.size();
    const double norm = std::abs(t) * h.frobenius_norm();
    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }

    ComplexMatrix x = to_complex(h.dense());
    x *= Complex(0.0, -t / std::ldexp(1.0, squarings));

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= kTaylorDegree; ++k) {
        term = term * x;
        term *= Complex(1.0 / k, 0.0);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace twinwalk
