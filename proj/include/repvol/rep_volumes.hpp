#pragma once

/**
 * @file rep_volumes.hpp
 * @brief The finite set of volumes of representations of a Seifert
 * manifold into Iso_e(SL2R-tilde), with witnesses.
 *
 * A tuple (n_1..n_r; n) of integers is admissible when
 *
 *     sum floor(n_i/a_i) - n <= 2g - 2   and   sum ceil(n_i/a_i) - n >= 2 - 2g,
 *
 * and its volume is 4 pi^2 (sum n_i/a_i - n)^2 / |e|. Writing
 * n_i = a_i k_i + r_i with 0 <= r_i < a_i and m = sum k_i - n, both the
 * condition and the value depend only on (r, m):
 *
 *     2 - 2g - #{r_i != 0} <= m <= 2g - 2,   value = (sum r_i/a_i + m)^2 / |e|,
 *
 * so the infinite tuple space collapses to a finite loop over (r, m).
 */

#include <cstdint>
#include <span>
#include <vector>

#include "repvol/rational.hpp"
#include "repvol/seifert.hpp"
#include "repvol/volume.hpp"

namespace repvol {

// (r, m) class of admissible tuples.
struct AdmissibleTuple {
    std::vector<std::int64_t> residues;
    std::int64_t shift = 0;

    friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;
};

// Rational shadow of a representation: rho(h) = (zeta, 1) and the central
// parts z_i of rho(s_i). Satisfies zeta = (sum n_i/a_i - n)/e,
// z_i = n_i/a_i - (b_i/a_i) zeta, sum z_i = n.
struct RepresentationCertificate {
    std::int64_t n = 0;
    std::vector<std::int64_t> n_list;
    Rational zeta;
    std::vector<Rational> z_list;
};

struct VolumeEntry {
    VolumeValue volume;
    RepresentationCertificate certificate;
    AdmissibleTuple witness;
};

// Requires g >= 1 and one a_i >= 1 per n_i.
bool ehn_admissible(std::int64_t genus, std::span<const std::int64_t> n_list, std::int64_t n,
                    std::span<const std::int64_t> a_list);

// Exact volume coefficient (sum n_i/a_i - n)^2 / |e| of an admissible tuple.
VolumeValue volume_of_tuple(const SeifertInvariants& s, std::span<const std::int64_t> n_list,
                            std::int64_t n);

RepresentationCertificate make_certificate(const SeifertInvariants& s,
                                           std::span<const std::int64_t> n_list, std::int64_t n);

// Checks the three certificate identities and that volume_of_tuple on the
// certificate's tuple equals `volume`.
bool certificate_consistent(const SeifertInvariants& s, const RepresentationCertificate& cert,
                            const VolumeValue& volume);

// Ascending, deduplicated. Ties between tuples keep the lexicographically
// smallest (r, m); its certificate uses n_i = r_i and n = -m.
std::vector<VolumeEntry> enumerate_volume_set(const SeifertInvariants& s);

// chi^2 / |e|, attained by the faithful discrete representation.
VolumeValue max_volume(const SeifertInvariants& s);

// Search box for the brute-force oracle: n_i ranges over
// [-R a_i, R a_i] with R = quotient_radius, n over the feasible window
// widened by one on each side.
struct BruteForceWindow {
    std::int64_t quotient_radius = 1;

    // R = 2 (4g + #fibers). Exhaustive but only usable on tiny inputs.
    static BruteForceWindow wide(const SeifertInvariants& s);
};

// Independent oracle: filters raw integer tuples with ehn_admissible and
// collects volume_of_tuple over them.
std::vector<VolumeValue> brute_force_volume_set(const SeifertInvariants& s,
                                                BruteForceWindow window = {});

}  // namespace repvol
