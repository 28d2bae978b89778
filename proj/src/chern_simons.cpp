#include "repvol/chern_simons.hpp"

#include <cmath>
#include <numbers>

#include "repvol/error.hpp"

namespace repvol::cs {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

}  // namespace

CsStar::CsStar(Complex value) : value_(value) {
    if (value == Complex{0.0, 0.0}) {
        throw PreconditionError("cs* value must be nonzero");
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw PreconditionError("cs* value must be finite");
    }
}

double seifert_cs_from_volume(double volume) {
    return 2.0 * volume / 3.0;
}

Rational seifert_cs_from_volume(const Rational& volume_coefficient) {
    return Rational(2, 3) * volume_coefficient;
}

double hyperbolic_volume_from_cs(Complex cs) {
    return -kPi * kPi * cs.imag();
}

CsStar cs_star(Complex cs) {
    return CsStar(std::exp(2.0 * kPi * kI * cs));
}

double hyperbolic_volume_from_cs_star(const CsStar& s) {
    return 0.5 * kPi * std::log(std::abs(s.value()));
}

CsStar shift_half_alpha(const CsStar& s, Complex beta) {
    return CsStar(s.value() * std::exp(-4.0 * kPi * kI * beta));
}

CsStar shift_half_beta(const CsStar& s, Complex alpha) {
    return CsStar(s.value() * std::exp(4.0 * kPi * kI * alpha));
}

CsStar solid_torus_cs_star(Complex beta) {
    return CsStar(std::exp(-4.0 * kPi * kI * beta));
}

CsStar path_cs_transport(const CsStar& start, std::span<const BoundaryHolonomy> path) {
    if (path.size() < 2) {
        throw PreconditionError("path transport needs at least 2 samples");
    }
    Complex integral{0.0, 0.0};
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const BoundaryHolonomy& p0 = path[k];
        const BoundaryHolonomy& p1 = path[k + 1];
        const Complex alpha_mid = 0.5 * (p0.alpha + p1.alpha);
        const Complex beta_mid = 0.5 * (p0.beta + p1.beta);
        integral += alpha_mid * (p1.beta - p0.beta) - beta_mid * (p1.alpha - p0.alpha);
    }
    return CsStar(start.value() * std::exp(-8.0 * kPi * kI * integral));
}

CsStar cs_star_multiply(const CsStar& lhs, const CsStar& rhs) {
    return CsStar(lhs.value() * rhs.value());
}

}  // namespace repvol::cs
