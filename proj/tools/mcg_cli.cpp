#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcg/autgroup.hpp"
#include "mcg/cluster.hpp"
#include "mcg/surface.hpp"
#include "mcg/words.hpp"
#include "suites.hpp"

using namespace mcg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MarkedSurface load_surface(const std::string& path) {
    try {
        return surface_from_json(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// A surface file stands for its mapping class group presentation.
Presentation load_presentation(const std::string& path) {
    const std::string text = read_file(path);
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) return Presentation::from_text(text);
    if (j.is_object() && j.contains("generators")) return Presentation::from_json(text);
    const auto d = aut_group_descriptor(load_surface(path));
    if (!d.mcg) throw UsageError(path + ": no presentation for this surface");
    return *d.mcg;
}

ExchangeMatrix load_matrix(const std::string& arg) {
    const std::string text = !arg.empty() && arg.front() == '[' ? arg : read_file(arg);
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("matrix is not valid JSON");
    try {
        if (j.is_array()) return ExchangeMatrix(j.get<IntMatrix>());
        return ExchangeMatrix(j.at("B").get<IntMatrix>(), j.value("D", std::vector<std::int64_t>{}));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("matrix: ") + e.what());
    }
}

std::string matrix_text(const ExchangeMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.size(); ++i) out += (i ? "," : "") + nlohmann::json(m.b[i]).dump();
    return out + "]";
}

int report(const std::vector<cli::ReportLine>& lines, bool json) {
    if (json) {
        std::cout << cli::report_json(lines) << "\n";
    } else {
        for (const auto& l : lines) std::cout << cli::format_line(l) << "\n";
    }
    for (const auto& l : lines)
        if (!l.pass) {
            std::cerr << "first counterexample: " << cli::format_line(l) << "\n";
            return 1;
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mapping class groups of marked surfaces and their cluster automorphism groups"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Structured output");

    std::string input;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a marked surface");
    classify_cmd->add_option("-i,--input", input, "Surface JSON")->required();

    std::string format = "text";
    auto* present_cmd = app.add_subcommand("present", "Emit the mapping class group presentation");
    present_cmd->add_option("-i,--input", input, "Surface JSON")->required();
    present_cmd->add_option("--format", format, "text or struct")->check(CLI::IsMember({"text", "struct"}));

    cli::SuiteOptions opt;
    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(cli::suite_names()));
    verify_cmd->add_option("--max-n", opt.max_n, "Size bound")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--samples", opt.samples, "Samples per check")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--rng-seed", opt.rng_seed, "Random seed");

    auto* abelianize_cmd = app.add_subcommand("abelianize", "Abelianization of a presentation or a surface's MCG");
    abelianize_cmd->add_option("-i,--input", input, "Surface JSON, presentation JSON or presentation text")->required();

    std::string matrix;
    std::vector<int> ks;
    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate an exchange matrix");
    mutate_cmd->add_option("-B", matrix, "Matrix as inline JSON or a JSON file")->required();
    mutate_cmd->add_option("-k", ks, "Mutation index (1-based), repeatable")->required()->check(CLI::PositiveNumber);

    auto* descriptor_cmd = app.add_subcommand("descriptor", "Row of the automorphism group table");
    descriptor_cmd->add_option("-i,--input", input, "Surface JSON")->required();

    auto* fourpunct_cmd = app.add_subcommand("fourpunct-check", "Checks on the 4-punctured sphere");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            const SurfaceClass c = classify(load_surface(input));
            std::cout << to_string(c.kind);
            if (c.kind == SurfaceKind::UnpuncturedAnnulus) std::cout << " p=" << c.p << " q=" << c.q;
            std::cout << "\n";
            return 0;
        }
        if (*present_cmd) {
            const auto d = aut_group_descriptor(load_surface(input));
            std::cout << (format == "struct" ? d.mcg->to_json() + "\n" : d.mcg->to_text());
            return 0;
        }
        if (*verify_cmd) return report(cli::run_suite(suite, opt), json);
        if (*abelianize_cmd) {
            std::cout << nlohmann::json(abelianization(load_presentation(input))).dump() << "\n";
            return 0;
        }
        if (*mutate_cmd) {
            ExchangeMatrix m = load_matrix(matrix);
            if (!m.skew_symmetrizable()) throw UsageError("matrix is not skew-symmetrizable");
            for (int k : ks) {
                if (k > m.size()) throw UsageError("mutation index " + std::to_string(k) + " out of range");
                m = mutate_matrix(m, k);
            }
            std::cout << matrix_text(m) << "\n";
            return 0;
        }
        if (*descriptor_cmd) {
            const auto d = aut_group_descriptor(load_surface(input));
            if (json) {
                std::cout << descriptor_to_json(d) << "\n";
            } else {
                std::cout << "kind: " << to_string(d.kind) << "\n"
                          << "row: " << d.row << "\n"
                          << "shape: " << d.shape << "\n";
            }
            return 0;
        }
        if (*fourpunct_cmd) return report(cli::run_suite("fourpunct", opt), json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
