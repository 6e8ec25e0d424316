#include "conedet/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "conedet/errors.hpp"

namespace conedet::quad {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix built
// from the three-term recurrence, weights come from the first eigenvector
// components scaled by the zeroth moment mu0.
Rule1D golub_welsch(const std::vector<double>& diag,
                    const std::vector<double>& offdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = diag[i];
        if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw SolverFailure("Golub-Welsch eigensolve did not converge");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

Rule1D gauss_legendre(int n) {
    if (n < 1) throw Error("gauss_legendre: n must be >= 1");
    std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        off[k - 1] = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    return golub_welsch(diag, off, 2.0);
}

Rule1D gauss_jacobi(int n, double beta) {
    if (n < 1) throw Error("gauss_jacobi: n must be >= 1");
    if (beta <= -1.0) throw Error("gauss_jacobi: beta must be > -1");
    if (std::abs(beta) < 1e-14) return gauss_legendre(n);
    const double a = 0.0, b = beta;
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        double bk;
        if (k == 1)
            bk = 4.0 * (1.0 + a) * (1.0 + b) /
                 ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        else
            bk = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                 (s * s * (s + 1.0) * (s - 1.0));
        off[k - 1] = std::sqrt(bk);
    }
    // mu0 = int_{-1}^{1} (1+x)^b dx
    const double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);
    return golub_welsch(diag, off, mu0);
}

Rule1D gauss_legendre_on(int n, double a, double b) {
    Rule1D base = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        base.nodes[i] = mid + half * base.nodes[i];
        base.weights[i] *= half;
    }
    return base;
}

Rule1D radial_power_rule(int n, double gamma, double R) {
    if (R <= 0.0) throw Error("radial_power_rule: R must be positive");
    Rule1D base = gauss_jacobi(n, gamma);
    const double scale = std::pow(0.5 * R, gamma + 1.0);
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * R * (1.0 + base.nodes[i]);
        rule.weights[i] = scale * base.weights[i];
    }
    return rule;
}

Rule2D triangle_rule(Complex a, Complex b, Complex c, int n) {
    return triangle_rule_singular(a, b, c, n, 0.0);
}

Rule2D triangle_rule_singular(Complex a, Complex b, Complex c, int n,
                              double two_beta) {
    if (n < 1) throw Error("triangle_rule: n must be >= 1");
    const Complex ab = b - a, ac = c - a;
    const double area2 = std::abs(ab.real() * ac.imag() - ab.imag() * ac.real());
    if (area2 == 0.0) throw Error("triangle_rule: degenerate triangle");

    // p(s,t) = a + s*e(t), e(t) = (1-t)(b-a) + t(c-a); dA = s * area2 ds dt.
    // With f = |p-a|^{2beta} g = s^{2beta} |e(t)|^{2beta} g, the s-integral
    // carries weight s^{2beta+1}; weights below divide the singular factor
    // back out so the caller can evaluate the full integrand.
    Rule1D sr = radial_power_rule(n, two_beta + 1.0, 1.0);
    Rule1D tr = gauss_legendre_on(n, 0.0, 1.0);

    Rule2D rule;
    rule.points.reserve(static_cast<size_t>(n) * n);
    rule.weights.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        const double t = tr.nodes[j];
        const Complex e = (1.0 - t) * ab + t * ac;
        const double emag = std::abs(e);
        const double efac =
            two_beta == 0.0 ? 1.0 : std::pow(emag, -two_beta);
        for (int i = 0; i < n; ++i) {
            const double s = sr.nodes[i];
            const double sfac =
                two_beta == 0.0 ? 1.0 : std::pow(s, -two_beta);
            rule.points.push_back(a + s * e);
            rule.weights.push_back(area2 * tr.weights[j] * sr.weights[i] *
                                   sfac * efac);
        }
    }
    return rule;
}

} // namespace conedet::quad
