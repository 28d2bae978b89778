// repvol: volumes of representations of Seifert and one-edged 3-manifolds.
//
// Exit codes: 0 success, 2 parse/usage error, 3 mathematical precondition
// violation, 1 anything else.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repvol/error.hpp"
#include "repvol/io.hpp"

namespace fs = std::filesystem;
using repvol::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Settings {
    std::string command;
    std::string file;
    std::string batch_dir;
    std::string out_dir;
    std::string slope;
    std::string cs_subop;
    std::vector<std::string> cs_args;
    int float_digits = 12;
    bool certificates = false;
    bool lenient = false;
};

std::pair<std::int64_t, std::int64_t> parse_slope(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("no comma");
        std::size_t used_a = 0;
        std::size_t used_c = 0;
        const std::string a_text = text.substr(0, comma);
        const std::string c_text = text.substr(comma + 1);
        const std::int64_t a = std::stoll(a_text, &used_a);
        const std::int64_t c = std::stoll(c_text, &used_c);
        if (used_a != a_text.size() || used_c != c_text.size()) throw std::invalid_argument("junk");
        return {a, c};
    } catch (const std::logic_error&) {
        throw repvol::ParseError("--slope", "expected two integers 'a,c', got '" + text + "'");
    }
}

// Runs one file-based command and returns its JSON report.
Json run_file_command(const Settings& s, const fs::path& file) {
    const auto desc = repvol::io::load_description(file, {.lenient = s.lenient});
    const repvol::io::OutputOptions out{.float_digits = s.float_digits,
                                        .certificates = s.certificates};
    if (s.command == "classify") return repvol::io::cmd_classify(desc);
    if (s.command == "volume-set") return repvol::io::cmd_volume_set(desc, out);
    if (s.command == "graph-volume") return repvol::io::cmd_graph_volume(desc, out);
    if (s.command == "dehn-estimate") {
        if (s.slope.empty()) throw repvol::ParseError("--slope", "required for dehn-estimate");
        const auto [a, c] = parse_slope(s.slope);
        return repvol::io::cmd_dehn_estimate(desc, a, c, out);
    }
    throw repvol::ParseError("", "command '" + s.command + "' does not take a description file");
}

// Maps an in-flight exception to an exit code, printing the diagnostic.
int report(const std::string& prefix) {
    try {
        throw;
    } catch (const repvol::ParseError& e) {
        std::cerr << prefix << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const repvol::PreconditionError& e) {
        std::cerr << prefix << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << prefix << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run_batch(const Settings& s) {
    if (s.command == "cs") {
        std::cerr << "parse error: cs does not support --batch\n";
        return kExitParse;
    }
    const fs::path dir(s.batch_dir);
    if (!fs::is_directory(dir)) {
        std::cerr << "parse error: --batch: not a directory: " << dir << '\n';
        return kExitParse;
    }
    const fs::path out_dir = s.out_dir.empty() ? dir / "results" : fs::path(s.out_dir);
    fs::create_directories(out_dir);

    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            inputs.push_back(entry.path());
        }
    }
    std::sort(inputs.begin(), inputs.end());

    int worst = kExitOk;
    for (const fs::path& input : inputs) {
        const fs::path target = out_dir / (input.stem().string() + "." + s.command + ".json");
        try {
            const Json result = run_file_command(s, input);
            std::ofstream(target) << result.dump(2) << '\n';
        } catch (...) {
            worst = std::max(worst, report(input.filename().string() + ": "));
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    Settings s;
    CLI::App app{"Exact volumes of representations of Seifert and one-edged 3-manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--batch", s.batch_dir, "Run CMD on every *.json file in DIR");
    app.add_option("--out-dir", s.out_dir, "Output directory for --batch (default DIR/results)");
    app.add_option("--float-digits", s.float_digits, "Significant digits of float renderings")
        ->check(CLI::Range(1, 17));
    app.add_flag("--lenient", s.lenient, "Ignore unknown keys in description files");

    auto file_command = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("FILE", s.file, "Manifold description (JSON)");
        sub->callback([&s, name] { s.command = name; });
        return sub;
    };
    file_command("classify", "Euler number, orbifold Euler characteristic and geometry");
    CLI::App* volume_set = file_command("volume-set", "All representation volumes of a Seifert manifold");
    volume_set->add_flag("--certificates", s.certificates, "Attach a representation certificate to each value");
    file_command("graph-volume", "Volume values of a one-edged graph manifold");
    CLI::App* dehn = file_command("dehn-estimate", "Leading-order Dehn-filling volume estimate");
    dehn->add_option("--slope", s.slope, "Filling slope a,c");

    CLI::App* cs = app.add_subcommand("cs", "Chern-Simons conversions");
    cs->add_option("SUBOP", s.cs_subop, "from-vol | to-vol | star | shift-a | shift-b | solid-torus | multiply | transport")
        ->required();
    cs->add_option("ARGS", s.cs_args, "Arguments of SUBOP");
    cs->callback([&s] { s.command = "cs"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    if (!s.batch_dir.empty()) {
        return run_batch(s);
    }
    try {
        if (s.command == "cs") {
            std::cout << repvol::io::cmd_cs(s.cs_subop, s.cs_args, s.float_digits) << '\n';
            return kExitOk;
        }
        if (s.file.empty()) {
            throw repvol::ParseError("FILE", "a description file is required");
        }
        std::cout << run_file_command(s, s.file).dump(2) << '\n';
        return kExitOk;
    } catch (...) {
        return report("");
    }
}
