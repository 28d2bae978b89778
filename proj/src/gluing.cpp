#include "repvol/gluing.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "repvol/error.hpp"
#include "repvol/rep_volumes.hpp"
#include "repvol/seifert.hpp"

namespace repvol {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GluingMatrix::GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (a * d - b * c != -1) {
        throw PreconditionError("gluing matrix must have determinant -1, got " +
                                std::to_string(a * d - b * c));
    }
}

GluingMatrix GluingMatrix::inverse() const {
    return GluingMatrix(-d_, b_, c_, -a_);
}

CoveringParameters::CoveringParameters(std::int64_t n, std::int64_t q) : n_(n), q_(q), p_(0) {
    if (n < 1 || q < 1) {
        throw PreconditionError("covering degree n and characteristic q must be positive");
    }
    if (n % (q * q) != 0) {
        throw PreconditionError("n must equal p*q^2 for a positive integer p");
    }
    p_ = n / (q * q);
}

CoveringParameters CoveringParameters::from_p(std::int64_t p, std::int64_t q) {
    if (p < 1) {
        throw PreconditionError("p must be a positive integer");
    }
    return CoveringParameters(p * q * q, q);
}

std::string to_string(GraphCase c) {
    switch (c) {
        case GraphCase::I: return "i";
        case GraphCase::II: return "ii";
        case GraphCase::III: return "iii";
        case GraphCase::IV: return "iv";
    }
    return "?";
}

std::vector<GraphVolume> graph_volume_values(const GluingMatrix& m, const CoveringParameters& cov) {
    if (m.b() == 0) {
        throw PreconditionError("Seifert gluing: not a one-edged graph manifold (b = 0)");
    }
    const Rational p(cov.p());
    std::vector<GraphVolume> out;
    if (m.a() == 0 && m.d() == 0) {
        out.push_back({GraphCase::I, VolumeValue(p * 2)});
    }
    if (m.a() != 0 && m.c() != 0) {
        out.push_back({GraphCase::II, VolumeValue(p / Rational(std::abs(m.a() * m.c())))});
    }
    if (m.c() != 0 && m.d() != 0) {
        out.push_back({GraphCase::III, VolumeValue(p / Rational(std::abs(m.c() * m.d())))});
    }
    if (m.c() == 0) {
        out.push_back({GraphCase::IV, VolumeValue(p / Rational(std::abs(m.b())))});
    }
    return out;
}

VolumeValue case_ii_pipeline(std::int64_t a, std::int64_t c, std::int64_t p) {
    if (a == 0 || c == 0) {
        throw PreconditionError("case (ii) requires ac != 0");
    }
    if (p < 1) {
        throw PreconditionError("p must be a positive integer");
    }
    // Filling each of the p lifted tori along (a, 1) adds a fiber with
    // invariant 1/a, written with positive order as (|a|, sign a). The base
    // genus only has to be large enough for admissibility.
    const std::int64_t sign_a = a > 0 ? 1 : -1;
    const SeifertInvariants filled(p + 2, std::vector<Fiber>(static_cast<std::size_t>(p),
                                                             Fiber{std::abs(a), sign_a}));
    const Rational e = euler_number(filled);
    if (e != Rational(p, a)) {
        throw std::logic_error("case (ii) pipeline: unexpected Euler number");
    }
    // n_i = sign a, n = 0 puts sum n_i/a_i - n = e, so the volume is e^2/|e|.
    const std::vector<std::int64_t> n_list(static_cast<std::size_t>(p), sign_a);
    const VolumeValue piece = volume_of_tuple(filled, n_list, 0);
    const VolumeValue other_piece(Rational(0));
    return additivity(piece, other_piece).scaled(Rational(1, std::abs(c)));
}

double additivity(double vol_left, double vol_right) {
    return vol_left + vol_right;
}

VolumeValue additivity(const VolumeValue& vol_left, const VolumeValue& vol_right) {
    return vol_left + vol_right;
}

HyperbolicPieceData::HyperbolicPieceData(double volume, std::complex<double> cusp_modulus,
                                         double threshold)
    : volume(volume), cusp_modulus(cusp_modulus), threshold(threshold) {
    if (!(cusp_modulus.imag() > 0.0)) {
        throw PreconditionError("cusp modulus z0 must have positive imaginary part");
    }
    if (!(volume >= 0.0) || !std::isfinite(volume)) {
        throw PreconditionError("hyperbolic volume must be finite and non-negative");
    }
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw PreconditionError("filling threshold must be positive");
    }
}

bool filling_admissible(std::int64_t a, std::int64_t c, double threshold) {
    if (!(threshold > 0.0)) {
        throw PreconditionError("filling threshold must be positive");
    }
    return std::hypot(static_cast<double>(a), static_cast<double>(c)) > threshold;
}

double geodesic_length_leading(std::complex<double> z0, std::int64_t a, std::int64_t c) {
    if (!(z0.imag() > 0.0)) {
        throw PreconditionError("cusp modulus z0 must have positive imaginary part");
    }
    if (a == 0 && c == 0) {
        throw PreconditionError("slope (0, 0) is not a filling slope");
    }
    const std::complex<double> w = static_cast<double>(a) + z0 * static_cast<double>(c);
    return 2.0 * kPi * z0.imag() / std::norm(w);
}

FillingEstimate dehn_filling_volume_estimate(const HyperbolicPieceData& piece, std::int64_t a,
                                             std::int64_t c, const CoveringParameters& cov) {
    if (!filling_admissible(a, c, piece.threshold)) {
        throw PreconditionError(
            "below Dehn-filling threshold, hyperbolic Dehn filling theorem not applicable");
    }
    const std::complex<double> z0 = piece.cusp_modulus;
    const std::complex<double> w = static_cast<double>(a) + z0 * static_cast<double>(c);
    const double q = static_cast<double>(cov.q());
    const double n = static_cast<double>(cov.n());

    FillingEstimate est;
    est.length_gamma = geodesic_length_leading(z0, a, c);
    est.filled_volume_leading = piece.volume - 0.5 * kPi * est.length_gamma;
    est.total_volume_leading = n * (piece.volume - kPi * kPi * z0.imag() / (q * std::norm(w)));
    return est;
}

}  // namespace repvol
