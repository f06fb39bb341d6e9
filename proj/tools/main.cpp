#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grassmann/serialize.hpp"

namespace fs = std::filesystem;
using namespace grassmann;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_falsified = 2;

struct CommonOptions {
    int capacity = default_capacity;
    std::string out = "-";
};

void write_output(const std::string& text, const std::string& out) {
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream stream(out, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot open output path " + out);
    stream << text;
    if (!stream) throw std::runtime_error("failed writing " + out);
}

// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream stream(tmp, std::ios::binary);
        if (!stream) throw std::runtime_error("cannot open " + tmp.string());
        stream << text;
        if (!stream) throw std::runtime_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, path);
}

FillVariant variant_for_coefficients(const std::string& coefficients) {
    return coefficients == "twisted" ? FillVariant::shifted : FillVariant::standard;
}

int run_cohomology(int k, int n, const std::string& coefficients, bool as_homology, bool oracle,
                   const CommonOptions& common) {
    GrassmannShape shape(k, n);
    Json request{{"command", "cohomology"},
                 {"k", k},
                 {"n", n},
                 {"coefficients", coefficients},
                 {"homology", as_homology},
                 {"oracle", oracle}};

    CohomologyTable table{shape, FillVariant::standard, {}, Provenance::f2_fast_path};
    if (as_homology) {
        // Duality fixes the coefficient system: constant for even n, twisted
        // for odd n, reported in complementary degree.
        FillVariant variant = n % 2 == 0 ? FillVariant::standard : FillVariant::shifted;
        table = oracle ? cohomology_snf_oracle(shape, variant)
                       : cohomology(shape, variant, common.capacity);
        std::reverse(table.groups.begin(), table.groups.end());
    } else {
        FillVariant variant = variant_for_coefficients(coefficients);
        table = oracle ? cohomology_snf_oracle(shape, variant)
                       : cohomology(shape, variant, common.capacity);
    }
    write_output(render(make_document(request, table_payload(table, as_homology))), common.out);
    return exit_ok;
}

int run_graph(int k, int n, const std::string& variant, const std::string& format,
              const CommonOptions& common) {
    GrassmannShape shape(k, n);
    std::string text;
    Json request{
        {"command", "graph"}, {"k", k}, {"n", n}, {"variant", variant}, {"format", format}};
    if (variant == "plain") {
        BruhatGraph graph = build_bruhat_graph(shape, common.capacity);
        text = format == "dot" ? graph_dot(graph)
                               : render(make_document(request, graph_payload(graph)));
    } else {
        FillVariant fill = variant == "shifted" ? FillVariant::shifted : FillVariant::standard;
        WeightedLattice lattice = classify_edges(shape, fill, common.capacity);
        text = format == "dot" ? graph_dot(lattice)
                               : render(make_document(request, graph_payload(lattice)));
    }
    write_output(text, common.out);
    return exit_ok;
}

int run_poly(int k, int n, const CommonOptions& common) {
    GrassmannShape shape(k, n);
    Json request{{"command", "poly"}, {"k", k}, {"n", n}};
    write_output(render(make_document(request, polynomials_payload(shape, common.capacity))),
                 common.out);
    return exit_ok;
}

int run_verify(std::optional<int> k, std::optional<int> n, std::optional<int> max_n,
               const CommonOptions& common) {
    Json request{{"command", "verify"}};
    std::vector<CheckResult> results;
    if (max_n) {
        request["max_n"] = *max_n;
        results = run_checks_up_to(*max_n, common.capacity);
    } else {
        request["k"] = *k;
        request["n"] = *n;
        results = run_checks(GrassmannShape(*k, *n), common.capacity);
    }
    write_output(render(make_document(request, verification_payload(results))), common.out);
    return all_passed(results) ? exit_ok : exit_falsified;
}

int run_table(int max_n, const std::string& out, const std::string& cache_dir,
              const CommonOptions& common) {
    fs::path cache(cache_dir);
    fs::create_directories(cache);
    const bool to_stdout = out == "-";
    if (!to_stdout) fs::create_directories(out);

    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            Json tables = Json::object();
            for (FillVariant variant : {FillVariant::standard, FillVariant::shifted}) {
                std::string key = std::to_string(k) + "_" + std::to_string(n) + "_" +
                                  to_string(variant) + ".v" + schema_version + ".json";
                fs::path cached = cache / key;
                Json payload;
                bool have_cached = false;
                if (fs::exists(cached)) {
                    std::ifstream stream(cached);
                    payload = Json::parse(stream, nullptr, false);
                    have_cached = !payload.is_discarded();
                }
                if (!have_cached) {
                    payload = table_payload(cohomology(shape, variant, common.capacity), false);
                    write_file_atomic(cached, render(payload));
                }
                tables[variant == FillVariant::standard ? "constant" : "twisted"] =
                    std::move(payload);
            }
            Json request{{"command", "table"}, {"k", k}, {"n", n}};
            Json document = make_document(
                request, Json{{"shape", shape_json(shape)}, {"tables", std::move(tables)}});
            if (to_stdout) {
                std::cout << render(document);
            } else {
                fs::path file = fs::path(out) / ("gr_" + std::to_string(k) + "_" +
                                                 std::to_string(n) + ".v" + schema_version +
                                                 ".json");
                write_file_atomic(file, render(document));
            }
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral cohomology of real Grassmannians via checkered Young diagrams"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--capacity-override", common.capacity,
                   "Maximum n accepted by lattice constructions")
        ->capture_default_str();

    int k = 0, n = 0;
    std::string coefficients = "constant";
    bool as_homology = false, oracle = false;
    auto* cohom = app.add_subcommand("cohomology", "Cohomology or homology table of Gr(k,n)");
    cohom->add_option("k", k, "subspace dimension")->required();
    cohom->add_option("n", n, "ambient dimension")->required();
    cohom->add_option("--coefficients", coefficients, "constant or twisted")
        ->check(CLI::IsMember({"constant", "twisted"}))
        ->capture_default_str();
    cohom->add_flag("--homology", as_homology, "report homology via duality");
    cohom->add_flag("--oracle", oracle, "confirm through the integer Smith-normal-form route");
    cohom->add_option("--out", common.out, "output path, - for stdout");

    std::string variant = "standard", format = "json";
    auto* graph = app.add_subcommand("graph", "Weighted or plain Bruhat graph of Gr(k,n)");
    graph->add_option("k", k, "subspace dimension")->required();
    graph->add_option("n", n, "ambient dimension")->required();
    graph->add_option("--variant", variant, "standard, shifted or plain")
        ->check(CLI::IsMember({"standard", "shifted", "plain"}))
        ->capture_default_str();
    graph->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    graph->add_option("--out", common.out, "output path, - for stdout");

    auto* poly = app.add_subcommand("poly", "Cell-sum and closed polynomials for Gr(k,n)");
    poly->add_option("k", k, "subspace dimension")->required();
    poly->add_option("n", n, "ambient dimension")->required();
    poly->add_option("--out", common.out, "output path, - for stdout");

    std::optional<int> verify_k, verify_n, verify_max_n;
    auto* verify = app.add_subcommand("verify", "Run the full cross-check suite");
    verify->add_option("k", verify_k, "subspace dimension");
    verify->add_option("n", verify_n, "ambient dimension");
    verify->add_option("--max-n", verify_max_n, "check every shape with n up to this bound");
    verify->add_option("--out", common.out, "output path, - for stdout");

    int table_max_n = 6;
    std::string table_out = "-", cache_dir = ".grassmann-cache";
    auto* table = app.add_subcommand("table", "Emit cohomology tables for all shapes up to n");
    table->add_option("--max-n", table_max_n, "largest ambient dimension")
        ->capture_default_str();
    table->add_option("--out", table_out, "output directory, - for stdout")
        ->capture_default_str();
    table->add_option("--cache-dir", cache_dir, "cache directory for computed tables")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return err.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cohom->parsed())
            return run_cohomology(k, n, coefficients, as_homology, oracle, common);
        if (graph->parsed()) return run_graph(k, n, variant, format, common);
        if (poly->parsed()) return run_poly(k, n, common);
        if (verify->parsed()) {
            bool have_shape = verify_k.has_value() && verify_n.has_value();
            if (have_shape == verify_max_n.has_value()) {
                std::cerr << "verify needs either k n or --max-n\n";
                return exit_usage;
            }
            return run_verify(verify_k, verify_n, verify_max_n, common);
        }
        if (table->parsed()) return run_table(table_max_n, table_out, cache_dir, common);
    } catch (const falsification_error& err) {
        std::cerr << "falsification: " << err.what() << "\n";
        return exit_falsified;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
