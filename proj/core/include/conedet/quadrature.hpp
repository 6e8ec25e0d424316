#pragma once

#include <array>
#include <functional>
#include <vector>

#include "conedet/types.hpp"

namespace conedet::quad {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
Rule1D gauss_legendre(int n);

// Gauss-Jacobi rule on [-1, 1] with weight (1+x)^beta, beta > -1:
// sum w_i f(x_i) == int_{-1}^{1} (1+x)^beta f(x) dx for poly f of deg <= 2n-1.
Rule1D gauss_jacobi(int n, double beta);

// Gauss-Legendre mapped to [a, b].
Rule1D gauss_legendre_on(int n, double a, double b);

// Radial rule on [0, R]: sum w_i f(r_i) == int_0^R r^gamma f(r) dr,
// exact for polynomial f of degree <= 2n-1, gamma > -1.
Rule1D radial_power_rule(int n, double gamma, double R);

// 2-D rule over a planar triangle; apply as sum w_i f(points_i) ~ int_T f dA.
struct Rule2D {
    std::vector<Complex> points;
    std::vector<double> weights;
};

// Tensor Duffy rule collapsed at vertex `a`; accurate for smooth integrands.
Rule2D triangle_rule(Complex a, Complex b, Complex c, int n);

// Duffy rule collapsed at vertex `a` for integrands of the form
// f(p) = |p - a|^{two_beta} * smooth(p). The caller evaluates the full f at
// the nodes; the weights fold the |p-a|^{two_beta} factor back out and use a
// radial rule exact for r^{two_beta+1} monomials. two_beta == 0 reduces to
// triangle_rule.
Rule2D triangle_rule_singular(Complex a, Complex b, Complex c, int n, double two_beta);

} // namespace conedet::quad
