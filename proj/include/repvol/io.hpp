#pragma once

/**
 * @file io.hpp
 * @brief Manifold description files and the JSON reports behind the CLI.
 *
 * Descriptions are UTF-8 JSON objects selected by "kind":
 *
 *   {"kind": "seifert", "genus": 1, "fibers": [[2, 1], [3, 1]]}
 *   {"kind": "one-edged-graph", "matrix": [[0, 1], [1, 0]], "covering": {"n": 4, "q": 2}}
 *   {"kind": "seifert-hyperbolic",
 *    "hyperbolic": {"volume": 2.0298, "z0": [0, 1], "threshold": 6.3},
 *    "covering": {"n": 1, "q": 1},
 *    "seifert": {"genus": 2, "fibers": []}}            // optional, informational
 *
 * Exact rationals are written as "p/q" strings. Volume objects carry a
 * "units" key: "4pi^2" for exact coefficients, "raw" for hyperbolic reals.
 */

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "repvol/gluing.hpp"
#include "repvol/seifert.hpp"
#include "repvol/volume.hpp"

namespace repvol::io {

using Json = nlohmann::ordered_json;

enum class ManifoldKind { Seifert, OneEdgedGraph, SeifertHyperbolic };

std::string_view to_string(ManifoldKind kind) noexcept;

struct ManifoldDescription {
    ManifoldKind kind = ManifoldKind::Seifert;
    std::optional<SeifertInvariants> seifert;
    std::optional<GluingMatrix> matrix;
    std::optional<CoveringParameters> covering;
    std::optional<HyperbolicPieceData> hyperbolic;
};

struct ParseOptions {
    bool lenient = false;  // ignore unknown keys instead of rejecting them
};

struct OutputOptions {
    int float_digits = 12;
    bool certificates = false;
};

// Throws ParseError on malformed JSON or structure, PreconditionError when
// the values break a mathematical invariant (a_i < 1, det != -1, ...).
ManifoldDescription parse_description(std::string_view text, ParseOptions options = {});
ManifoldDescription load_description(const std::filesystem::path& path, ParseOptions options = {});

// Rounds to `digits` significant decimal digits.
double round_significant(double x, int digits);

std::string format_real(double x, int digits);
// "re+imi" / "re-imi"; components below |z| * 10^-digits print as 0.
std::string format_complex(std::complex<double> z, int digits);
// Accepts "x", "x+yi", "x-yi", "yi", "i", "-i". Throws ParseError.
std::complex<double> parse_complex(std::string_view text);

Json volume_json(const VolumeValue& v, int float_digits);
// Inverse of the exact part of volume_json / cmd_volume_set output.
std::vector<VolumeValue> volumes_from_json(const Json& list);

Json cmd_classify(const ManifoldDescription& desc);
Json cmd_volume_set(const ManifoldDescription& desc, const OutputOptions& options = {});
Json cmd_graph_volume(const ManifoldDescription& desc, const OutputOptions& options = {});
Json cmd_dehn_estimate(const ManifoldDescription& desc, std::int64_t a, std::int64_t c,
                       const OutputOptions& options = {});

// `subop` is one of from-vol, to-vol, star, shift-a, shift-b, solid-torus,
// multiply, transport. transport takes a cs* start value and a JSON sample
// file: [{"alpha": x, "beta": y}, ...] where x, y are numbers or [re, im].
std::string cmd_cs(std::string_view subop, const std::vector<std::string>& args,
                   int float_digits = 12);

}  // namespace repvol::io
