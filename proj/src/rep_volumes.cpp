#include "repvol/rep_volumes.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "repvol/error.hpp"

namespace repvol {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
    std::int64_t q = x / d;
    return (x % d != 0 && x < 0) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t x, std::int64_t d) {
    std::int64_t q = x / d;
    return (x % d != 0 && x > 0) ? q + 1 : q;
}

void require_positive_genus(std::int64_t genus) {
    if (genus < 1) {
        throw PreconditionError(
            "unsupported: genus-0 base orbifold; the volume set is only known for bases of "
            "positive genus");
    }
}

Rational nonzero_euler_number(const SeifertInvariants& s) {
    Rational e = euler_number(s);
    if (e.is_zero()) {
        throw PreconditionError("not SL2R-tilde: volume formula undefined (Euler number is 0)");
    }
    return e;
}

std::vector<std::int64_t> orders(const SeifertInvariants& s) {
    std::vector<std::int64_t> a;
    a.reserve(s.fibers().size());
    for (const Fiber& f : s.fibers()) a.push_back(f.a);
    return a;
}

void require_tuple_length(const SeifertInvariants& s, std::span<const std::int64_t> n_list) {
    if (n_list.size() != s.fibers().size()) {
        throw PreconditionError("tuple has " + std::to_string(n_list.size()) + " entries for " +
                                std::to_string(s.fibers().size()) + " fibers");
    }
}

// sum n_i/a_i - n
Rational signed_height(const SeifertInvariants& s, std::span<const std::int64_t> n_list,
                       std::int64_t n) {
    Rational sum(-n);
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        sum += Rational(n_list[i], s.fibers()[i].a);
    }
    return sum;
}

// Advances `digits` as an odometer with the last position fastest.
// Returns false after the final combination.
bool advance(std::vector<std::int64_t>& digits, std::span<const std::int64_t> lo,
             std::span<const std::int64_t> hi) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < hi[i]) {
            ++digits[i];
            return true;
        }
        digits[i] = lo[i];
    }
    return false;
}

}  // namespace

bool ehn_admissible(std::int64_t genus, std::span<const std::int64_t> n_list, std::int64_t n,
                    std::span<const std::int64_t> a_list) {
    require_positive_genus(genus);
    if (n_list.size() != a_list.size()) {
        throw PreconditionError("n_list and a_list differ in length");
    }
    std::int64_t floor_sum = 0;
    std::int64_t ceil_sum = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (a_list[i] < 1) {
            throw PreconditionError("fiber order must be >= 1");
        }
        floor_sum += floor_div(n_list[i], a_list[i]);
        ceil_sum += ceil_div(n_list[i], a_list[i]);
    }
    return floor_sum - n <= 2 * genus - 2 && ceil_sum - n >= 2 - 2 * genus;
}

VolumeValue volume_of_tuple(const SeifertInvariants& s, std::span<const std::int64_t> n_list,
                            std::int64_t n) {
    require_tuple_length(s, n_list);
    const Rational e = nonzero_euler_number(s);
    const auto a = orders(s);
    if (!ehn_admissible(s.genus(), n_list, n, a)) {
        throw PreconditionError("tuple violates the horizontal-foliation inequalities");
    }
    const Rational h = signed_height(s, n_list, n);
    return VolumeValue(h * h / e.abs());
}

RepresentationCertificate make_certificate(const SeifertInvariants& s,
                                           std::span<const std::int64_t> n_list, std::int64_t n) {
    require_tuple_length(s, n_list);
    const Rational e = nonzero_euler_number(s);

    RepresentationCertificate cert;
    cert.n = n;
    cert.n_list.assign(n_list.begin(), n_list.end());
    cert.zeta = signed_height(s, n_list, n) / e;
    cert.z_list.reserve(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const Fiber& f = s.fibers()[i];
        cert.z_list.push_back(Rational(n_list[i], f.a) - Rational(f.b, f.a) * cert.zeta);
    }
    return cert;
}

bool certificate_consistent(const SeifertInvariants& s, const RepresentationCertificate& cert,
                            const VolumeValue& volume) {
    if (cert.n_list.size() != s.fibers().size() || cert.z_list.size() != s.fibers().size()) {
        return false;
    }
    const Rational e = euler_number(s);
    if (e.is_zero() || cert.zeta * e != signed_height(s, cert.n_list, cert.n)) {
        return false;
    }
    Rational z_sum;
    for (std::size_t i = 0; i < cert.z_list.size(); ++i) {
        const Fiber& f = s.fibers()[i];
        if (cert.z_list[i] != Rational(cert.n_list[i], f.a) - Rational(f.b, f.a) * cert.zeta) {
            return false;
        }
        z_sum += cert.z_list[i];
    }
    if (z_sum != Rational(cert.n)) {
        return false;
    }
    if (!ehn_admissible(s.genus(), cert.n_list, cert.n, orders(s))) {
        return false;
    }
    return volume_of_tuple(s, cert.n_list, cert.n) == volume;
}

std::vector<VolumeEntry> enumerate_volume_set(const SeifertInvariants& s) {
    require_positive_genus(s.genus());
    const Rational abs_e = nonzero_euler_number(s).abs();
    const std::int64_t g = s.genus();
    const auto a = orders(s);

    std::vector<std::int64_t> lo(a.size(), 0);
    std::vector<std::int64_t> hi(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) hi[i] = a[i] - 1;

    // Iteration is lexicographic in (r, m), so the first witness seen for a
    // coefficient is the smallest one.
    std::map<Rational, AdmissibleTuple> best;
    std::vector<std::int64_t> r(a.size(), 0);
    do {
        Rational fractional;
        std::int64_t nonzero = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] != 0) {
                fractional += Rational(r[i], a[i]);
                ++nonzero;
            }
        }
        for (std::int64_t m = 2 - 2 * g - nonzero; m <= 2 * g - 2; ++m) {
            const Rational h = fractional + Rational(m);
            best.try_emplace(h * h / abs_e, AdmissibleTuple{r, m});
        }
    } while (advance(r, lo, hi));

    std::vector<VolumeEntry> out;
    out.reserve(best.size());
    for (auto& [coefficient, tuple] : best) {
        VolumeEntry entry;
        entry.volume = VolumeValue(coefficient);
        entry.certificate = make_certificate(s, tuple.residues, -tuple.shift);
        entry.witness = std::move(tuple);
        out.push_back(std::move(entry));
    }
    return out;
}

VolumeValue max_volume(const SeifertInvariants& s) {
    if (classify_geometry(s) != GeometryClass::SL2RTilde) {
        throw PreconditionError(
            "not SL2R-tilde: maximal volume needs nonzero Euler number and negative orbifold "
            "Euler characteristic");
    }
    const Rational chi = orbifold_euler_characteristic(s);
    return VolumeValue(chi * chi / euler_number(s).abs());
}

BruteForceWindow BruteForceWindow::wide(const SeifertInvariants& s) {
    return BruteForceWindow{2 * (4 * s.genus() + static_cast<std::int64_t>(s.fibers().size()))};
}

std::vector<VolumeValue> brute_force_volume_set(const SeifertInvariants& s,
                                                BruteForceWindow window) {
    require_positive_genus(s.genus());
    nonzero_euler_number(s);
    if (window.quotient_radius < 1) {
        throw PreconditionError("brute-force window radius must be >= 1");
    }
    const std::int64_t g = s.genus();
    const auto a = orders(s);

    // sum n_i/a_i - n is tracked exactly as the integer L * (sum n_i/a_i - n).
    std::int64_t lcm = 1;
    for (std::int64_t ai : a) {
        lcm = std::lcm(lcm, ai);
        if (lcm > (std::int64_t{1} << 32)) {
            throw PreconditionError("brute-force oracle: fiber orders too large");
        }
    }

    std::vector<std::int64_t> lo(a.size());
    std::vector<std::int64_t> hi(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        lo[i] = -window.quotient_radius * a[i];
        hi[i] = window.quotient_radius * a[i];
    }

    struct Witness {
        std::vector<std::int64_t> n_list;
        std::int64_t n;
    };
    std::map<std::int64_t, Witness> by_height;

    std::vector<std::int64_t> n_list = lo;
    do {
        std::int64_t floor_sum = 0;
        std::int64_t ceil_sum = 0;
        std::int64_t scaled = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            floor_sum += floor_div(n_list[i], a[i]);
            ceil_sum += ceil_div(n_list[i], a[i]);
            scaled += n_list[i] * (lcm / a[i]);
        }
        const std::int64_t n_lo = floor_sum - (2 * g - 2) - 1;
        const std::int64_t n_hi = ceil_sum - (2 - 2 * g) + 1;
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            if (!ehn_admissible(g, n_list, n, a)) continue;
            by_height.try_emplace(scaled - n * lcm, Witness{n_list, n});
        }
    } while (advance(n_list, lo, hi));

    std::set<Rational> coefficients;
    for (const auto& [height, w] : by_height) {
        coefficients.insert(volume_of_tuple(s, w.n_list, w.n).coefficient());
    }
    std::vector<VolumeValue> out;
    out.reserve(coefficients.size());
    for (const Rational& q : coefficients) out.emplace_back(q);
    return out;
}

}  // namespace repvol
