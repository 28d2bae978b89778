#include "repvol/seifert.hpp"

#include <string>

#include "repvol/error.hpp"

namespace repvol {

SeifertInvariants::SeifertInvariants(std::int64_t genus, std::vector<Fiber> fibers)
    : genus_(genus), fibers_(std::move(fibers)) {
    if (genus_ < 0) {
        throw PreconditionError("genus must be non-negative, got " + std::to_string(genus_));
    }
    for (std::size_t i = 0; i < fibers_.size(); ++i) {
        if (fibers_[i].a < 1) {
            throw PreconditionError("fibers[" + std::to_string(i) + "]: a must be >= 1, got " +
                                    std::to_string(fibers_[i].a));
        }
    }
}

std::string_view to_string(GeometryClass g) noexcept {
    switch (g) {
        case GeometryClass::H3: return "H3";
        case GeometryClass::SL2RTilde: return "SL2R-tilde";
        case GeometryClass::H2xR: return "H2xR";
        case GeometryClass::Sol: return "Sol";
        case GeometryClass::Nil: return "Nil";
        case GeometryClass::Euclidean: return "Euclidean";
        case GeometryClass::S3: return "S3";
        case GeometryClass::S2xR: return "S2xR";
        case GeometryClass::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

Rational euler_number(const SeifertInvariants& s) {
    Rational e;
    for (const Fiber& f : s.fibers()) {
        e += Rational(f.b, f.a);
    }
    return e;
}

Rational orbifold_euler_characteristic(const SeifertInvariants& s) {
    Rational chi(2 - 2 * s.genus());
    for (const Fiber& f : s.fibers()) {
        chi -= Rational(f.a - 1, f.a);
    }
    return chi;
}

SeifertInvariants normalize(const SeifertInvariants& s) {
    std::vector<Fiber> kept;
    kept.reserve(s.fibers().size());
    std::int64_t trivial_sum = 0;
    for (const Fiber& f : s.fibers()) {
        if (f.a == 1) {
            trivial_sum += f.b;
        } else {
            kept.push_back(f);
        }
    }
    if (trivial_sum != 0) {
        kept.push_back(Fiber{1, trivial_sum});
    }
    return SeifertInvariants(s.genus(), std::move(kept));
}

GeometryClass classify_geometry(const SeifertInvariants& s) {
    const bool twisted = !euler_number(s).is_zero();
    const int chi_sign = orbifold_euler_characteristic(s).sign();
    if (chi_sign < 0) return twisted ? GeometryClass::SL2RTilde : GeometryClass::H2xR;
    if (chi_sign == 0) return twisted ? GeometryClass::Nil : GeometryClass::Euclidean;
    return twisted ? GeometryClass::S3 : GeometryClass::S2xR;
}

}  // namespace repvol
