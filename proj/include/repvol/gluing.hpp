#pragma once

/**
 * @file gluing.hpp
 * @brief Two-piece (one-edged) manifolds: graph-manifold volume values
 * and the Seifert/hyperbolic Dehn-filling volume estimate.
 *
 * The sewing map sends s_- to a s_+ + c h_+ and h_- to b s_+ + d h_+ in
 * section-fiber (or shortest-geodesic, on a cusp) bases.
 */

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "repvol/rational.hpp"
#include "repvol/volume.hpp"

namespace repvol {

// Integer 2x2 matrix [[a, b], [c, d]] with ad - bc = -1.
class GluingMatrix {
public:
    GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    // [[-d, b], [c, -a]]; determinant -1 again.
    GluingMatrix inverse() const;

    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;

private:
    std::int64_t a_, b_, c_, d_;
};

// n-fold q x q-characteristic covering; p = n / q^2 is the number of
// lifted tori and must be a positive integer.
class CoveringParameters {
public:
    CoveringParameters(std::int64_t n, std::int64_t q);
    static CoveringParameters from_p(std::int64_t p, std::int64_t q);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t p() const noexcept { return p_; }

private:
    std::int64_t n_, q_, p_;
};

enum class GraphCase { I, II, III, IV };

std::string to_string(GraphCase c);

struct GraphVolume {
    GraphCase label;
    VolumeValue volume;
};

// Every applicable value, in case order:
//   (i)   a = d = 0  -> 2p
//   (ii)  ac != 0    -> p/|ac|
//   (iii) cd != 0    -> p/|cd|
//   (iv)  c = 0      -> p/|b|
// in units of 4 pi^2. Requires b != 0.
std::vector<GraphVolume> graph_volume_values(const GluingMatrix& m, const CoveringParameters& cov);

// Case (ii) recomputed along its construction: the filled covering piece is
// a Seifert manifold with p fibers of slope (a, 1), Euler number p/a and a
// representation of volume 4 pi^2 |p/a|; dividing by the cyclic covering
// degree |c| gives the value on the original manifold.
VolumeValue case_ii_pipeline(std::int64_t a, std::int64_t c, std::int64_t p);

double additivity(double vol_left, double vol_right);
VolumeValue additivity(const VolumeValue& vol_left, const VolumeValue& vol_right);

struct HyperbolicPieceData {
    HyperbolicPieceData(double volume, std::complex<double> cusp_modulus, double threshold);

    double volume;                      // complete structure
    std::complex<double> cusp_modulus;  // Im > 0
    double threshold;                   // filling norm constant C > 0
};

// Suggested filling threshold 2 pi (2 pi-lemma with unit length constant).
inline constexpr double kSuggestedThreshold = 2.0 * std::numbers::pi;

inline constexpr const char* kFillingErrorNote = "O(1/(a^4+c^4)) uncontrolled";

struct FillingEstimate {
    double length_gamma = 0.0;
    double filled_volume_leading = 0.0;
    double total_volume_leading = 0.0;
    std::string error_order_note = kFillingErrorNote;
};

bool filling_admissible(std::int64_t a, std::int64_t c, double threshold);

// Leading term 2 pi Im(z0) / |a + z0 c|^2 of the core geodesic length.
double geodesic_length_leading(std::complex<double> z0, std::int64_t a, std::int64_t c);

FillingEstimate dehn_filling_volume_estimate(const HyperbolicPieceData& piece, std::int64_t a,
                                             std::int64_t c, const CoveringParameters& cov);

}  // namespace repvol
