#include "search_driver.hpp"

#include "ipset/canonical.hpp"
#include "ipset/catalog.hpp"
#include "ipset/embedding.hpp"
#include "ipset/errors.hpp"
#include "ipset/io.hpp"
#include "ipset/modular.hpp"
#include "ipset/search.hpp"
#include "ipset/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ipset;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Semantic failures (exit 1) and bad input (exit 2) travel as distinct exceptions.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

int cmd_verify(const std::string& path, const std::string& format)
{
    const auto m = read_matrix_file(path);
    const auto r = verify(m);
    const std::string ch = r.characteristic ? r.characteristic->get_str() : "none";
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& [name, c] : r.checks())
            checks[std::string(name)] = {{"passed", c->passed}, {"detail", c->detail}};
        nlohmann::json j = {{"passed", r.passed()},
                            {"n", m.size()},
                            {"diameter", integer_json(r.diameter_value)},
                            {"characteristic", r.characteristic ? integer_json(*r.characteristic) : nullptr},
                            {"cluster_candidate", r.cluster_candidate},
                            {"checks", checks}};
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& [name, c] : r.checks())
            std::cout << name << ": " << (c->passed ? "pass" : "FAIL") << " (" << c->detail << ")\n";
        std::cout << "diameter=" << r.diameter_value.get_str() << " characteristic=" << ch
                  << " canonical=" << (r.canonical.passed ? "true" : "false")
                  << " cluster_candidate=" << (r.cluster_candidate ? "true" : "false") << '\n';
        std::cout << (r.passed() ? "pass" : "fail") << '\n';
    }
    return r.passed() ? kOk : kFailed;
}

int cmd_canon(const std::string& path, bool show_relabeling)
{
    const auto m = read_matrix_file(path);
    const auto c = canonical_form(m);
    std::cout << format_matrix(c.matrix);
    if (show_relabeling) {
        std::cout << "relabeling:";
        for (std::size_t i : c.relabeling)
            std::cout << ' ' << i + 1;
        std::cout << '\n';
    }
    return kOk;
}

int cmd_embed(const std::string& path, const std::string& format)
{
    const auto m = read_matrix_file(path);
    EmbeddedPointSet e;
    try {
        e = embed(m);
    } catch (const GeometryError& err) {
        throw Failure(err.what());
    } catch (const DomainError& err) {
        throw Failure(err.what());
    }
    if (format == "json")
        std::cout << format_embedding_json(e) << '\n';
    else
        std::cout << format_embedding_text(e);
    return kOk;
}

int cmd_distances(const std::string& path)
{
    const auto e = parse_embedding_json(read_file(path));
    DistanceReadback back;
    try {
        back = distances_from_embedding(e);
    } catch (const GeometryError& err) {
        throw Failure(err.what());
    }
    std::cout << format_matrix(back.matrix);
    for (const auto& [i, j] : back.coincident)
        std::cerr << "CoincidentPoints: p" << i + 1 << " and p" << j + 1 << '\n';
    return back.coincident.empty() ? kOk : kFailed;
}

int cmd_mindiam(std::size_t n, std::int64_t cap, const std::string& filter)
{
    const auto found = minimum_diameter(n, cap, CharFilter::parse(filter));
    if (!found) {
        std::cout << "n=" << n << " min_diameter=none cap=" << cap << '\n';
        return kFailed;
    }
    std::cout << "n=" << n << " min_diameter=" << *found << '\n';
    return kOk;
}

int cmd_modsearch(int modulus, std::uint64_t budget, const std::string& format)
{
    if (modulus < 2 || modulus > kMaxModulus)
        throw CLI::ValidationError("--modulus", "must lie in [2, " + std::to_string(kMaxModulus) + "]");
    const auto r = mod_max_general_position(modulus, budget);
    if (format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : r.witness)
            pts.push_back({p.u, p.v});
        std::cout << nlohmann::json{{"modulus", r.modulus},
                                    {"size", r.size},
                                    {"lower_bound", r.lower_bound},
                                    {"nodes", r.nodes},
                                    {"witness", pts}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "modulus=" << r.modulus << " size=" << r.size << ' ' << (r.lower_bound ? "lower_bound" : "exact")
                  << " nodes=" << r.nodes << '\n';
        for (const auto& p : r.witness)
            std::cout << p.u << ' ' << p.v << '\n';
    }
    return kOk;
}

int cmd_catalog(const std::string& format)
{
    if (format == "json") {
        for (const auto& e : catalog())
            std::cout << nlohmann::json{{"name", e.name}, {"value", integer_json(e.value)}, {"note", e.note}}.dump()
                      << '\n';
        return kOk;
    }
    std::size_t name_w = 0, value_w = 0;
    for (const auto& e : catalog()) {
        name_w = std::max(name_w, e.name.size());
        value_w = std::max(value_w, e.value.get_str().size());
    }
    for (const auto& e : catalog())
        std::cout << std::left << std::setw(static_cast<int>(name_w + 2)) << e.name
                  << std::setw(static_cast<int>(value_w + 2)) << e.value.get_str() << "# " << e.note << '\n';
    return kOk;
}

Shard parse_shard(const std::string& text)
{
    const auto slash = text.find('/');
    std::size_t i = 0, t = 0;
    try {
        if (slash == std::string::npos)
            throw std::invalid_argument("no slash");
        std::size_t used = 0;
        i = std::stoul(text.substr(0, slash), &used);
        if (used != slash)
            throw std::invalid_argument("index");
        t = std::stoul(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1)
            throw std::invalid_argument("total");
    } catch (const std::exception&) {
        throw CLI::ValidationError("--shard", "expected i/t, got '" + text + "'");
    }
    return {i, t};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Integral point sets in general position: verification, embedding and search"};
    app.require_subcommand(1);
    int code = kOk;

    std::string file, format = "text";

    auto* verify_cmd = app.add_subcommand("verify", "check a distance matrix file");
    verify_cmd->add_option("file", file, "matrix file")->required();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->callback([&] { code = cmd_verify(file, format); });

    bool show_relabeling = false;
    auto* canon_cmd = app.add_subcommand("canon", "print the canonical relabeling of a matrix");
    canon_cmd->add_option("file", file, "matrix file")->required();
    canon_cmd->add_flag("--relabeling", show_relabeling, "also print the permutation (1-based)");
    canon_cmd->callback([&] { code = cmd_canon(file, show_relabeling); });

    auto* embed_cmd = app.add_subcommand("embed", "exact coordinates of a matrix");
    embed_cmd->add_option("file", file, "matrix file")->required();
    embed_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    embed_cmd->callback([&] { code = cmd_embed(file, format); });

    auto* dist_cmd = app.add_subcommand("distances", "distance matrix of an embedding (json from embed)");
    dist_cmd->add_option("file", file, "embedding file")->required();
    dist_cmd->callback([&] { code = cmd_distances(file); });

    cli::SearchRun run;
    std::string char_filter = "any", shard, search_format = "json";
    std::string checkpoint;
    bool allow_concyclic = false;
    auto* search_cmd = app.add_subcommand("search", "enumerate canonical point sets by diameter");
    search_cmd->add_option("--n", run.config.target_n, "number of points")->required();
    search_cmd->add_option("--dmin", run.config.d_min, "smallest diameter")->default_val(1);
    search_cmd->add_option("--dmax", run.config.d_max, "largest diameter")->required();
    search_cmd->add_option("--char", char_filter, "any, K or div:K")->default_val("any");
    search_cmd->add_flag("--cluster", run.config.cluster_mode, "characteristic 1 only");
    search_cmd->add_flag("--allow-concyclic", allow_concyclic, "drop the no-four-on-a-circle condition");
    search_cmd->add_option("--shard", shard, "i/t: keep outer keys owned by shard i of t");
    search_cmd->add_option("--checkpoint", checkpoint, "append finished \"d k\" keys here");
    auto* resume = search_cmd->add_flag("--resume", run.resume, "skip keys already in the checkpoint");
    search_cmd->add_option("--jobs", run.jobs, "worker threads, 0 = all cores")->default_val(1);
    search_cmd->add_option("--format", search_format)->check(CLI::IsMember({"json", "matrix"}));
    resume->needs(search_cmd->get_option("--checkpoint"));
    search_cmd->callback([&] {
        run.config.char_filter = CharFilter::parse(char_filter);
        run.config.require_general_position = !allow_concyclic;
        if (!shard.empty())
            run.config.shard = parse_shard(shard);
        if (auto why = run.config.validation_error())
            throw CLI::ValidationError("search", *why);
        if (!checkpoint.empty())
            run.checkpoint = checkpoint;
        if (run.jobs == 0)
            run.jobs = std::max(1u, std::thread::hardware_concurrency());
        run.format = search_format == "json" ? cli::RecordFormat::Json : cli::RecordFormat::Matrix;
        const auto s = cli::run_search(run, std::cout);
        std::cerr << "search: " << s.results << " results, " << s.keys << " keys done, " << s.skipped
                  << " keys resumed\n";
    });

    std::size_t n = 0;
    std::int64_t cap = 0;
    auto* mindiam_cmd = app.add_subcommand("mindiam", "smallest diameter with an n-point set");
    mindiam_cmd->add_option("--n", n)->required()->check(CLI::Range(3, 64));
    mindiam_cmd->add_option("--cap", cap, "largest diameter tried")->required()->check(
        CLI::Range(std::int64_t{1}, kMaxSearchDiameter));
    mindiam_cmd->add_option("--char", char_filter, "any, K or div:K")->default_val("any");
    mindiam_cmd->callback([&] { code = cmd_mindiam(n, cap, char_filter); });

    int modulus = 0;
    std::uint64_t budget = 0;
    auto* mod_cmd = app.add_subcommand("modsearch", "largest general-position integral set in Z_n^2");
    mod_cmd->add_option("--modulus", modulus)->required();
    mod_cmd->add_option("--budget", budget, "node budget, 0 = exhaustive")->default_val(0);
    mod_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    mod_cmd->callback([&] { code = cmd_modsearch(modulus, budget, format); });

    auto* catalog_cmd = app.add_subcommand("catalog", "known values");
    catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    catalog_cmd->callback([&] { code = cmd_catalog(format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Failure& e) {
        std::cerr << e.what() << '\n';
        return kFailed;
    }
    return code;
}
