// sympcheck: obstruction reports for symplectic algebras and manifold constructions.
//
// Exit codes: 0 analysis completed (whatever the verdict), 2 parse or
// evaluation error, 3 bad command-line flags.

#include "sympcheck/dim4.hpp"
#include "sympcheck/expr.hpp"
#include "sympcheck/manifold.hpp"
#include "sympcheck/obstructions.hpp"
#include "sympcheck/report.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

using namespace sympcheck;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitFlags = 3;

struct BadFlags : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

void summarize(const json& doc)
{
    if (!isatty(STDOUT_FILENO))
        return;
    if (doc.is_object() && doc.contains("verdict"))
        std::cerr << doc.value("input", "") << ": " << doc["verdict"].get<std::string>() << "\n";
}

json analyze_expression(const std::string& text)
{
    ExprPtr e = parse(text);
    return report_json(analyze_manifold(evaluate(*e)), text);
}

int run_analyze(const std::string& expression, const std::string& file)
{
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw BadFlags("cannot read " + file);
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                lines.push_back(line);

        std::vector<std::future<json>> jobs;
        for (const auto& line : lines)
            jobs.push_back(std::async(std::launch::async, [line] {
                try {
                    return analyze_expression(line);
                } catch (const Error& e) {
                    return json{{"input", line}, {"error", e.what()}};
                }
            }));
        json out = json::array();
        int status = 0;
        for (auto& job : jobs) {
            json doc = job.get();
            if (doc.contains("error")) {
                std::cerr << doc["input"].get<std::string>() << ": " << doc["error"].get<std::string>() << "\n";
                status = kExitInput;
            }
            out.push_back(std::move(doc));
        }
        emit(out);
        return status;
    }
    if (expression.empty())
        throw BadFlags("analyze needs an expression or --file");
    json doc = analyze_expression(expression);
    emit(doc);
    summarize(doc);
    return 0;
}

int run_dim4(const std::vector<std::string>& forms, const std::vector<std::string>& w2s, int b1, int summands,
             std::optional<int> radius)
{
    if (forms.empty() || forms.size() != w2s.size())
        throw BadFlags("dim4 needs matching --Q and --w2 flags");
    if (b1 < 0)
        throw BadFlags("--b1 must be non-negative");

    std::vector<dim4::IntersectionLattice> pieces;
    std::string input;
    if (forms.size() > 1) {
        if (summands != 0 && summands != static_cast<int>(forms.size()))
            throw BadFlags("--summands disagrees with the number of --Q flags");
        for (std::size_t i = 0; i < forms.size(); ++i) {
            pieces.emplace_back(dim4::parse_form(forms[i]), dim4::parse_w2(w2s[i]), i == 0 ? b1 : 0);
            input += (i ? " # " : "") + std::string("[Q ") + forms[i] + ", w2 " + w2s[i] + "]";
        }
    } else {
        // One lattice split into `summands` consecutive equal diagonal blocks.
        dim4::IntersectionLattice whole(dim4::parse_form(forms[0]), dim4::parse_w2(w2s[0]), b1);
        const int parts = summands == 0 ? 1 : summands;
        if (parts < 1 || whole.b2() % parts != 0)
            throw BadFlags("--summands must divide b2 = " + std::to_string(whole.b2()));
        const int block = whole.b2() / parts;
        for (int p = 0; p < parts; ++p) {
            dim4::IntMatrix q(block, std::vector<long>(block));
            std::vector<int> w(block);
            for (int i = 0; i < block; ++i) {
                for (int j = 0; j < whole.b2(); ++j) {
                    bool inside = j / block == p;
                    long v = whole.form()[p * block + i][j];
                    if (inside)
                        q[i][j - p * block] = v;
                    else if (v != 0)
                        throw Error(ErrorCode::InvalidLattice, "form is not block diagonal for --summands " +
                                                                   std::to_string(parts));
                }
                w[i] = whole.w2()[p * block + i];
            }
            pieces.emplace_back(std::move(q), std::move(w), p == 0 ? b1 : 0);
        }
        input = "Q " + forms[0] + ", w2 " + w2s[0] + ", b1 " + std::to_string(b1) + ", summands " + std::to_string(parts);
    }

    if (!radius) {
        if (const char* env = std::getenv("SYMPCHECK_SEARCH_RADIUS")) {
            try {
                radius = std::stoi(env);
            } catch (const std::exception&) {
                throw BadFlags("SYMPCHECK_SEARCH_RADIUS is not an integer");
            }
        }
    }
    if (radius && *radius < 1)
        throw BadFlags("search radius must be positive");

    json doc = dim4_json(dim4::dim4_report(pieces, radius), input);
    emit(doc);
    return 0;
}

int run_thm21(int k, int j)
{
    if (k < 1 || j < 1)
        throw BadFlags("--k and --j must be >= 1");
    const std::string text =
        "S2^" + std::to_string(2 * k) + " # CS(" + std::to_string(j) + ", S1 x S" + std::to_string(4 * k - 1) + ")";
    json doc = analyze_expression(text);
    emit(doc);
    summarize(doc);
    return 0;
}

int run_thm22(int n)
{
    if (n < 6 || n % 2 != 0)
        throw BadFlags("--dim must be even and >= 6");
    auto report = thm22_example(n);
    json doc = report_json(report, report.descriptor.name);
    emit(doc);
    summarize(doc);
    return 0;
}

int run_catalog()
{
    json out = json::array();
    auto add = [&](const std::string& name, const ManifoldDescriptor& d) {
        out.push_back({{"name", name},
                       {"dimension", d.dim},
                       {"betti", betti(d.cohomology)},
                       {"spin_c", to_string(d.spin_c)},
                       {"simply_connected", to_string(d.simply_connected)}});
    };
    add("pt", point_descriptor());
    for (int n : {1, 2, 3, 4, 5})
        add("S" + std::to_string(n), sphere_descriptor(n));
    for (int m : {1, 2, 3})
        add("CP" + std::to_string(m), cp_descriptor(m));
    for (int n : {1, 2, 3, 4})
        add("T" + std::to_string(n), torus_descriptor(n));
    add("Wu", wu_manifold());
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Obstructions to symplectic structures on manifolds and Poincare duality algebras"};
    app.require_subcommand(1);

    std::string expression, file;
    auto* analyze = app.add_subcommand("analyze", "Analyze a construction expression, e.g. \"S2^2 # S1 x S3\"");
    analyze->add_option("expression", expression, "Construction expression");
    analyze->add_option("--file", file, "Analyze one expression per line");

    std::vector<std::string> forms, w2s;
    int b1 = 0, summands = 0;
    std::optional<int> radius;
    auto* dim4_cmd = app.add_subcommand("dim4", "Wu and Seiberg-Witten rules for a 4-manifold intersection form");
    dim4_cmd->add_option("--Q", forms, "Form: diag:a,b,... or rows:[a,b];[c,d] (repeat per summand)")->required();
    dim4_cmd->add_option("--w2", w2s, "w2 pairing vector, e.g. 1,1,1 (repeat per summand)")->required();
    dim4_cmd->add_option("--b1", b1, "First Betti number");
    dim4_cmd->add_option("--summands", summands, "Split a single --Q into this many equal diagonal blocks");
    dim4_cmd->add_option("--radius", radius, "Search radius for indefinite forms");

    int k = 0, j = 0;
    auto* thm21 = app.add_subcommand("thm21", "(S2)^{2k} # j(S1 x S^{4k-1}) obstruction report");
    thm21->add_option("--k", k)->required();
    thm21->add_option("--j", j)->required();

    int dim = 0;
    auto* thm22 = app.add_subcommand("thm22", "spun Wu manifold # CP^{n/2} report");
    thm22->add_option("--dim", dim)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "List catalog manifolds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitFlags;
    }

    try {
        if (*analyze)
            return run_analyze(expression, file);
        if (*dim4_cmd)
            return run_dim4(forms, w2s, b1, summands, radius);
        if (*thm21)
            return run_thm21(k, j);
        if (*thm22)
            return run_thm22(dim);
        if (*catalog_cmd)
            return run_catalog();
    } catch (const BadFlags& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlags;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitFlags;
}
