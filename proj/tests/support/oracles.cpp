#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracles {

namespace {

double simpson(double fa, double fc, double fb, double h) {
    return (fa + 4.0 * fc + fb) * h / 6.0;
}

double simpson_ad(const std::function<double(double)>& f, double a, double c,
                  double b, double fa, double fc, double fb, double whole,
                  double tol, int depth) {
    const double ca = 0.5 * (a + c), cb = 0.5 * (c + b);
    const double fca = f(ca), fcb = f(cb);
    const double left = simpson(fa, fca, fc, c - a);
    const double right = simpson(fc, fcb, fb, b - c);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol || depth <= 0) return left + right + err;
    return simpson_ad(f, a, ca, c, fa, fca, fc, left, 0.5 * tol, depth - 1) +
           simpson_ad(f, c, cb, b, fc, fcb, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double c = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fc = f(c);
    const double whole = simpson(fa, fc, fb, b - a);
    return simpson_ad(f, a, c, b, fa, fc, fb, whole, tol, max_depth);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   int iterations) {
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-17 * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

std::array<double, 3> hermitian3_eigenvalues(
    const std::array<std::array<std::complex<double>, 3>, 3>& m) {
    const double off = std::norm(m[0][1]) + std::norm(m[0][2]) + std::norm(m[1][2]);
    std::array<double, 3> eig;
    if (off == 0.0) {
        eig = {m[0][0].real(), m[1][1].real(), m[2][2].real()};
        std::sort(eig.begin(), eig.end(), std::greater<>());
        return eig;
    }
    const double q = (m[0][0].real() + m[1][1].real() + m[2][2].real()) / 3.0;
    double p2 = 2.0 * off;
    for (int i = 0; i < 3; ++i) {
        const double d = m[i][i].real() - q;
        p2 += d * d;
    }
    const double p = std::sqrt(p2 / 6.0);

    // B = (M - q I) / p; r = det(B) / 2 is real for Hermitian input and lies
    // in [-1, 1] up to rounding.
    std::array<std::array<std::complex<double>, 3>, 3> b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b[i][j] = (m[i][j] - (i == j ? std::complex<double>(q) : 0.0)) / p;
    const std::complex<double> det =
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
        b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
        b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det.real() / 2.0, -1.0, 1.0);

    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + two_pi_3);
    const double e2 = 3.0 * q - e1 - e3;
    eig = {e1, e2, e3};
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::array<double, 3> singular_values3(
    const std::array<std::array<std::complex<double>, 3>, 3>& m) {
    std::array<std::array<std::complex<double>, 3>, 3> h{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += std::conj(m[k][i]) * m[k][j];
            h[i][j] = acc;
        }
    auto eig = hermitian3_eigenvalues(h);
    for (auto& e : eig) e = std::sqrt(std::max(e, 0.0));
    return eig;
}

double forward_residual_ld(std::complex<double> p, double P, double beta) {
    const std::complex<long double> z(p.real(), p.imag());
    const std::complex<long double> val =
        z * (1.0L + static_cast<long double>(beta) * z * z) -
        static_cast<long double>(P);
    return static_cast<double>(std::abs(val));
}

double chi2_2_quantile(double q) { return -2.0 * std::log(1.0 - q); }

double log_uniform(std::mt19937_64& gen, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(gen));
}

}  // namespace oracles
