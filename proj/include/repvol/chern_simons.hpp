#pragma once

/**
 * @file chern_simons.hpp
 * @brief Value-level Chern-Simons calculus.
 *
 * Raw cs values are defined only modulo Z in their real part; anything
 * compared across sections goes through cs* = exp(2 i pi cs), which is a
 * nonzero complex number.
 */

#include <complex>
#include <span>

#include "repvol/rational.hpp"

namespace repvol::cs {

using Complex = std::complex<double>;

// Boundary holonomy (alpha, beta) of a representation in normal form on a
// boundary torus: s -> diag(e^{2 i pi alpha}, ...), h -> diag(e^{2 i pi beta}, ...).
struct BoundaryHolonomy {
    Complex alpha;
    Complex beta;
};

class CsStar {
public:
    explicit CsStar(Complex value);

    Complex value() const noexcept { return value_; }

private:
    Complex value_;
};

// Seifert side: cs = (2/3) vol.
double seifert_cs_from_volume(double volume);
// Exact form on coefficients of 4 pi^2.
Rational seifert_cs_from_volume(const Rational& volume_coefficient);

// Hyperbolic side: Im cs = -vol / pi^2. The real part is ignored.
double hyperbolic_volume_from_cs(Complex cs);

CsStar cs_star(Complex cs);

// Volume read off a cs* value: |cs*| = exp(-2 pi Im cs), so
// vol = -pi^2 Im cs = (pi/2) log |cs*|.
double hyperbolic_volume_from_cs_star(const CsStar& s);

// Lift (alpha, beta) -> (alpha + 1/2, beta): multiply by exp(-4 i pi beta).
CsStar shift_half_alpha(const CsStar& s, Complex beta);

// Lift (alpha, beta) -> (alpha, beta + 1/2): multiply by exp(4 i pi alpha).
CsStar shift_half_beta(const CsStar& s, Complex alpha);

// Solid torus with lift (1/2, beta) in meridian-longitude basis.
CsStar solid_torus_cs_star(Complex beta);

// cs*(A_1) = cs*(A_0) exp(-8 i pi \int (alpha beta' - beta alpha') dt).
// The integral is taken segment by segment over the samples with
// trapezoidal (endpoint-average) coefficients:
//     sum_k  mid(alpha)_k * (beta_{k+1} - beta_k) - mid(beta)_k * (alpha_{k+1} - alpha_k).
// Accuracy is governed by the sample density. Needs >= 2 samples.
CsStar path_cs_transport(const CsStar& start, std::span<const BoundaryHolonomy> path);

// Gluing along a torus multiplies cs* of the two sides.
CsStar cs_star_multiply(const CsStar& lhs, const CsStar& rhs);

}  // namespace repvol::cs
