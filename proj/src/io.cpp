#include "repvol/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "repvol/chern_simons.hpp"
#include "repvol/error.hpp"
#include "repvol/rep_volumes.hpp"

namespace repvol::io {

namespace {

constexpr const char* kExactUnits = "4pi^2";
constexpr const char* kRawUnits = "raw";

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void check_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed,
                const ParseOptions& options) {
    if (options.lenient) return;
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ParseError(path.empty() ? key : path + "." + key,
                             "unknown key (pass --lenient to ignore)");
        }
    }
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path.empty() ? key : path + "." + key, "missing required key");
    }
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::int64_t as_integer(const Json& v, const std::string& path) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > INT64_MAX) {
            throw ParseError(path, "integer out of range");
        }
        return v.get<std::int64_t>();
    }
    throw ParseError(path, "expected integer");
}

double as_real(const Json& v, const std::string& path) {
    if (!v.is_number()) {
        throw ParseError(path, "expected number");
    }
    return v.get<double>();
}

std::complex<double> as_complex(const Json& v, const std::string& path) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ParseError(path, "expected [re, im]");
}

SeifertInvariants parse_seifert(const Json& obj, const std::string& path) {
    const std::int64_t genus = as_integer(require(obj, "genus", path), join(path, "genus"));
    const Json& fibers_json = require(obj, "fibers", path);
    const std::string fibers_path = join(path, "fibers");
    if (!fibers_json.is_array()) {
        throw ParseError(fibers_path, "expected list of [a, b] pairs");
    }
    std::vector<Fiber> fibers;
    for (std::size_t i = 0; i < fibers_json.size(); ++i) {
        const std::string item = fibers_path + "[" + std::to_string(i) + "]";
        const Json& pair = fibers_json[i];
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(item, "expected pair");
        }
        fibers.push_back(Fiber{as_integer(pair[0], item + "[0]"), as_integer(pair[1], item + "[1]")});
    }
    return SeifertInvariants(genus, std::move(fibers));
}

GluingMatrix parse_matrix(const Json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
        !v[1].is_array() || v[1].size() != 2) {
        throw ParseError(path, "expected [[a, b], [c, d]]");
    }
    return GluingMatrix(as_integer(v[0][0], path + "[0][0]"), as_integer(v[0][1], path + "[0][1]"),
                        as_integer(v[1][0], path + "[1][0]"), as_integer(v[1][1], path + "[1][1]"));
}

CoveringParameters parse_covering(const Json& v, const std::string& path,
                                  const ParseOptions& options) {
    if (!v.is_object()) {
        throw ParseError(path, "expected {\"n\": int, \"q\": int}");
    }
    check_keys(v, path, {"n", "q"}, options);
    return CoveringParameters(as_integer(require(v, "n", path), join(path, "n")),
                              as_integer(require(v, "q", path), join(path, "q")));
}

HyperbolicPieceData parse_hyperbolic(const Json& v, const std::string& path,
                                     const ParseOptions& options) {
    if (!v.is_object()) {
        throw ParseError(path, "expected object");
    }
    check_keys(v, path, {"volume", "z0", "threshold"}, options);
    return HyperbolicPieceData(as_real(require(v, "volume", path), join(path, "volume")),
                               as_complex(require(v, "z0", path), join(path, "z0")),
                               as_real(require(v, "threshold", path), join(path, "threshold")));
}

void require_kind(const ManifoldDescription& desc, ManifoldKind expected) {
    if (desc.kind != expected) {
        throw ParseError("kind", "expected '" + std::string(to_string(expected)) + "', got '" +
                                     std::string(to_string(desc.kind)) + "'");
    }
}

double parse_real_arg(std::string_view text, const std::string& what) {
    std::string s(text);
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ParseError(what, "expected a real number, got '" + s + "'");
    }
    return x;
}

std::vector<cs::BoundaryHolonomy> load_samples(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw ParseError(file, "cannot open sample file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json doc;
    try {
        doc = Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(file, line_col(buffer.str(), e.byte) + ": invalid JSON");
    }
    if (!doc.is_array()) {
        throw ParseError(file, "expected list of {\"alpha\": ..., \"beta\": ...} samples");
    }
    std::vector<cs::BoundaryHolonomy> samples;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "]";
        if (!doc[i].is_object()) {
            throw ParseError(path, "expected {\"alpha\": ..., \"beta\": ...}");
        }
        samples.push_back({as_complex(require(doc[i], "alpha", path), path + ".alpha"),
                           as_complex(require(doc[i], "beta", path), path + ".beta")});
    }
    return samples;
}

void require_args(std::string_view subop, const std::vector<std::string>& args, std::size_t n) {
    if (args.size() != n) {
        throw ParseError(std::string("cs ") + std::string(subop),
                         "expected " + std::to_string(n) + " argument(s), got " +
                             std::to_string(args.size()));
    }
}

}  // namespace

std::string_view to_string(ManifoldKind kind) noexcept {
    switch (kind) {
        case ManifoldKind::Seifert: return "seifert";
        case ManifoldKind::OneEdgedGraph: return "one-edged-graph";
        case ManifoldKind::SeifertHyperbolic: return "seifert-hyperbolic";
    }
    return "seifert";
}

ManifoldDescription parse_description(std::string_view text, ParseOptions options) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError("", line_col(text, e.byte) + ": invalid JSON");
    }
    if (!doc.is_object()) {
        throw ParseError("", "top level must be a JSON object");
    }
    const Json& kind_json = require(doc, "kind", "");
    if (!kind_json.is_string()) {
        throw ParseError("kind", "expected string");
    }
    const auto kind = kind_json.get<std::string>();

    ManifoldDescription desc;
    if (kind == "seifert") {
        desc.kind = ManifoldKind::Seifert;
        check_keys(doc, "", {"kind", "genus", "fibers"}, options);
        desc.seifert = parse_seifert(doc, "");
    } else if (kind == "one-edged-graph") {
        desc.kind = ManifoldKind::OneEdgedGraph;
        check_keys(doc, "", {"kind", "matrix", "covering"}, options);
        desc.matrix = parse_matrix(require(doc, "matrix", ""), "matrix");
        desc.covering = parse_covering(require(doc, "covering", ""), "covering", options);
    } else if (kind == "seifert-hyperbolic") {
        desc.kind = ManifoldKind::SeifertHyperbolic;
        check_keys(doc, "", {"kind", "hyperbolic", "covering", "seifert"}, options);
        desc.hyperbolic = parse_hyperbolic(require(doc, "hyperbolic", ""), "hyperbolic", options);
        desc.covering = parse_covering(require(doc, "covering", ""), "covering", options);
        if (auto it = doc.find("seifert"); it != doc.end()) {
            if (!it->is_object()) {
                throw ParseError("seifert", "expected object");
            }
            check_keys(*it, "seifert", {"genus", "fibers"}, options);
            desc.seifert = parse_seifert(*it, "seifert");
        }
    } else {
        throw ParseError("kind", "unknown kind '" + kind +
                                     "' (expected seifert, one-edged-graph or seifert-hyperbolic)");
    }
    return desc;
}

ManifoldDescription load_description(const std::filesystem::path& path, ParseOptions options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string(), "cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_description(buffer.str(), options);
}

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x + 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr) + 0.0;
}

std::string format_real(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x + 0.0);
    return buf;
}

std::string format_complex(std::complex<double> z, int digits) {
    const double cutoff = std::abs(z) * std::pow(10.0, -digits);
    double re = std::abs(z.real()) <= cutoff ? 0.0 : z.real();
    double im = std::abs(z.imag()) <= cutoff ? 0.0 : z.imag();
    std::string out = format_real(re, digits);
    std::string imag = format_real(im, digits);
    if (imag.front() != '-') out += '+';
    return out + imag + "i";
}

std::complex<double> parse_complex(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') s += ch;
    }
    auto fail = [&]() -> ParseError {
        return ParseError("complex", "cannot parse '" + std::string(text) + "'");
    };
    if (s.empty()) throw fail();

    auto number = [&](const std::string& part, bool imaginary) {
        if (imaginary && (part.empty() || part == "+")) return 1.0;
        if (imaginary && part == "-") return -1.0;
        char* end = nullptr;
        const double x = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size()) throw fail();
        return x;
    };

    if (s.back() != 'i') {
        return {number(s, false), 0.0};
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, number(s, true)};
    }
    return {number(s.substr(0, split), false), number(s.substr(split), true)};
}

Json volume_json(const VolumeValue& v, int float_digits) {
    Json out;
    out["coefficient"] = v.coefficient().to_string();
    out["value"] = round_significant(v.float_value(), float_digits);
    out["units"] = kExactUnits;
    return out;
}

std::vector<VolumeValue> volumes_from_json(const Json& list) {
    if (!list.is_array()) {
        throw ParseError("", "expected list of volume objects");
    }
    std::vector<VolumeValue> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "].coefficient";
        const Json& item = list[i];
        if (!item.is_object() || !item.contains("coefficient") ||
            !item["coefficient"].is_string()) {
            throw ParseError(path, "expected \"p/q\" string");
        }
        try {
            out.emplace_back(Rational::parse(item["coefficient"].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, e.what());
        }
    }
    return out;
}

Json cmd_classify(const ManifoldDescription& desc) {
    require_kind(desc, ManifoldKind::Seifert);
    const SeifertInvariants& s = *desc.seifert;
    Json out;
    out["e"] = euler_number(s).to_string();
    out["chi"] = orbifold_euler_characteristic(s).to_string();
    out["geometry"] = std::string(to_string(classify_geometry(s)));
    return out;
}

Json cmd_volume_set(const ManifoldDescription& desc, const OutputOptions& options) {
    require_kind(desc, ManifoldKind::Seifert);
    Json out = Json::array();
    for (const VolumeEntry& entry : enumerate_volume_set(*desc.seifert)) {
        Json item = volume_json(entry.volume, options.float_digits);
        if (options.certificates) {
            const RepresentationCertificate& c = entry.certificate;
            Json cert;
            cert["n"] = c.n;
            cert["n_list"] = c.n_list;
            cert["zeta"] = c.zeta.to_string();
            Json z = Json::array();
            for (const Rational& zi : c.z_list) z.push_back(zi.to_string());
            cert["z_list"] = std::move(z);
            item["certificate"] = std::move(cert);
        }
        out.push_back(std::move(item));
    }
    return out;
}

Json cmd_graph_volume(const ManifoldDescription& desc, const OutputOptions& options) {
    require_kind(desc, ManifoldKind::OneEdgedGraph);
    Json out = Json::array();
    for (const GraphVolume& gv : graph_volume_values(*desc.matrix, *desc.covering)) {
        Json item;
        item["case"] = to_string(gv.label);
        Json v = volume_json(gv.volume, options.float_digits);
        for (auto& [key, value] : v.items()) item[key] = value;
        out.push_back(std::move(item));
    }
    return out;
}

Json cmd_dehn_estimate(const ManifoldDescription& desc, std::int64_t a, std::int64_t c,
                       const OutputOptions& options) {
    require_kind(desc, ManifoldKind::SeifertHyperbolic);
    const FillingEstimate est =
        dehn_filling_volume_estimate(*desc.hyperbolic, a, c, *desc.covering);
    Json out;
    out["slope"] = {a, c};
    out["length_gamma"] = round_significant(est.length_gamma, options.float_digits);
    out["filled_volume_leading"] = round_significant(est.filled_volume_leading, options.float_digits);
    out["total_volume_leading"] = round_significant(est.total_volume_leading, options.float_digits);
    out["error_order_note"] = est.error_order_note;
    out["units"] = kRawUnits;
    return out;
}

std::string cmd_cs(std::string_view subop, const std::vector<std::string>& args,
                   int float_digits) {
    if (subop == "from-vol") {
        require_args(subop, args, 1);
        const double volume = parse_real_arg(args[0], "volume");
        if (volume < 0.0) {
            throw PreconditionError("volume must be nonnegative");
        }
        return format_real(cs::seifert_cs_from_volume(volume), float_digits);
    }
    if (subop == "to-vol") {
        require_args(subop, args, 1);
        return format_real(cs::hyperbolic_volume_from_cs(parse_complex(args[0])), float_digits);
    }
    if (subop == "star") {
        require_args(subop, args, 1);
        return format_complex(cs::cs_star(parse_complex(args[0])).value(), float_digits);
    }
    if (subop == "shift-a") {
        require_args(subop, args, 2);
        const cs::CsStar s(parse_complex(args[0]));
        return format_complex(cs::shift_half_alpha(s, parse_complex(args[1])).value(),
                              float_digits);
    }
    if (subop == "shift-b") {
        require_args(subop, args, 2);
        const cs::CsStar s(parse_complex(args[0]));
        return format_complex(cs::shift_half_beta(s, parse_complex(args[1])).value(),
                              float_digits);
    }
    if (subop == "solid-torus") {
        require_args(subop, args, 1);
        return format_complex(cs::solid_torus_cs_star(parse_complex(args[0])).value(),
                              float_digits);
    }
    if (subop == "multiply") {
        require_args(subop, args, 2);
        const cs::CsStar lhs(parse_complex(args[0]));
        const cs::CsStar rhs(parse_complex(args[1]));
        return format_complex(cs::cs_star_multiply(lhs, rhs).value(), float_digits);
    }
    if (subop == "transport") {
        require_args(subop, args, 2);
        const cs::CsStar start(parse_complex(args[0]));
        const auto samples = load_samples(args[1]);
        return format_complex(cs::path_cs_transport(start, samples).value(), float_digits);
    }
    throw ParseError("cs", "unknown subcommand '" + std::string(subop) +
                               "' (expected from-vol, to-vol, star, shift-a, shift-b, "
                               "solid-torus, multiply or transport)");
}

}  // namespace repvol::io
