#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "repvol/rational.hpp"

namespace repvol {

// Exceptional fiber with Seifert invariant b/a, a >= 1.
struct Fiber {
    std::int64_t a = 1;
    std::int64_t b = 0;

    friend bool operator==(const Fiber&, const Fiber&) = default;
};

/**
 * Closed orientable Seifert fibered space over an orientable base
 * orbifold of genus g, described by its exceptional fibers (a_i, b_i).
 * The fiber list may be empty (circle bundle over a closed surface).
 *
 * Throws PreconditionError if g < 0 or some a_i < 1.
 */
class SeifertInvariants {
public:
    SeifertInvariants(std::int64_t genus, std::vector<Fiber> fibers);

    std::int64_t genus() const noexcept { return genus_; }
    const std::vector<Fiber>& fibers() const noexcept { return fibers_; }

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;

private:
    std::int64_t genus_;
    std::vector<Fiber> fibers_;
};

// Thurston geometries. H3 and Sol never come out of classify_geometry;
// they are listed so the label set is complete.
enum class GeometryClass {
    H3,
    SL2RTilde,
    H2xR,
    Sol,
    Nil,
    Euclidean,
    S3,
    S2xR,
    NotApplicable,
};

std::string_view to_string(GeometryClass g) noexcept;

// e(N) = sum b_i / a_i.
Rational euler_number(const SeifertInvariants& s);

// chi = 2 - 2g - sum (1 - 1/a_i).
Rational orbifold_euler_characteristic(const SeifertInvariants& s);

// Drops every a_i = 1 fiber and appends a single (1, sum of their b_i)
// when that sum is nonzero. Order of the remaining fibers is kept.
SeifertInvariants normalize(const SeifertInvariants& s);

// Standard Seifert geometry table on the signs of (e, chi):
//   chi < 0: SL2R-tilde if e != 0, else H2xR
//   chi = 0: Nil if e != 0, else Euclidean
//   chi > 0: S3 if e != 0, else S2xR
GeometryClass classify_geometry(const SeifertInvariants& s);

}  // namespace repvol
