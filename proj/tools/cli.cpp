#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "superko/verify.hpp"

namespace superko::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "json";
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    int n = 0;
    std::string n_range = "0..7";
    std::size_t dim_cap = 8;
    int k_min = -3, k_max = 3;
    std::string suite;
    std::optional<std::string> input;
};

std::pair<int, int> parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d+)\s*(?:\.\.|:)\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--n-range expects LO..HI, got '" + s + "'");
    int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi) throw UsageError("--n-range is empty");
    if (lo < -24 || hi > 24) throw UsageError("--n-range must lie within -24..24");
    return {lo, hi};
}

std::uint64_t resolve_seed(const Config& c) {
    if (c.seed) return *c.seed;
    if (const char* env = std::getenv("SUPERKO_SEED")) {
        try {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("SUPERKO_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

std::string join_dims(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
    return s;
}

std::string torsion_text(const QuotientGroup& g) {
    std::string s;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) s += (i ? ", " : "") + g.torsion[i].get_str();
    return s;
}

Json tagged(const std::string& command, const Json& body) {
    Json j = {{"command", command}};
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

// ---- ko-table ---------------------------------------------------------------

std::pair<std::string, int> ko_table(const Config& c) {
    auto [lo, hi] = parse_range(c.n_range);
    Json rows = Json::array();
    std::ostringstream md;
    md << "| n | group | rank | torsion | generator dims |\n|---:|---|---:|---|---|\n";
    for (int n = lo; n <= hi; ++n) {
        QuotientGroup g = abs_quotient(n);
        std::vector<std::size_t> dims;
        for (const auto& m : irreducible_monomial(n)) dims.push_back(m.even_dim + m.odd_dim);
        Json row = to_json(g);
        row["generator_dims"] = dims;
        rows.push_back(row);
        md << "| " << n << " | " << g.presentation() << " | " << g.rank << " | " << torsion_text(g) << " | "
           << join_dims(dims) << " |\n";
    }
    if (c.format == "markdown") return {"# KO table, n = " + std::to_string(lo) + ".." + std::to_string(hi) + "\n\n" + md.str(), kOk};
    Json j = {{"command", "ko-table"}, {"n_min", lo}, {"n_max", hi}, {"rows", rows}};
    return {j.dump(2) + "\n", kOk};
}

// ---- tate ---------------------------------------------------------------------

std::pair<std::string, int> tate(const Config& c) {
    if (c.k_min > c.k_max) throw UsageError("--k-min must not exceed --k-max");
    if (c.k_max - c.k_min > 48) throw UsageError("the k window is limited to 49 degrees");
    TateReport r = tate_coefficients(c.n, c.k_min, c.k_max, c.dim_cap);
    int code = r.ok() ? kOk : kVerificationFailure;
    if (c.format == "markdown") {
        std::ostringstream md;
        md << "# Tate coefficients, n = " << r.n << ", k = " << r.k_min << ".." << r.k_max << "\n\n";
        md << "| k | group | components | ok |\n|---:|---|---:|---|\n";
        for (std::size_t i = 0; i < r.degrees.size(); ++i)
            md << "| " << r.k_min + static_cast<int>(i) << " | " << r.coefficients[i].presentation() << " | "
               << r.degrees[i].components.size() << " | " << (r.degrees[i].ok() ? "yes" : "no") << " |\n";
        md << "\n" << (r.ok() ? "PASS" : "FAIL") << "\n";
        return {md.str(), code};
    }
    return {tagged("tate", to_json(r)).dump(2) + "\n", code};
}

// ---- pi0 -----------------------------------------------------------------------

std::pair<std::string, int> pi0_cmd(const Config& c) {
    if (c.n < -24 || c.n > 24) throw UsageError("--n must lie within -24..24");
    if (c.dim_cap == 0) throw UsageError("--dim-cap must be positive");
    Pi0Report r = pi0(c.n, c.dim_cap);
    int code = r.ok() ? kOk : kVerificationFailure;
    if (c.format == "markdown") {
        std::ostringstream md;
        md << "# pi0 at n = " << r.n << ", dim cap " << r.dim_cap << "\n\n";
        md << "group " << r.group.presentation() << "; " << r.objects << " objects, " << r.edges << " edges, "
           << r.components.size() << " components\n\n";
        md << "| representative | label | size |\n|---|---|---:|\n";
        for (const auto& comp : r.components) {
            std::string rep, label;
            for (std::size_t i = 0; i < comp.representative.size(); ++i)
                rep += (i ? ", " : "") + std::to_string(comp.representative[i]);
            for (std::size_t i = 0; i < comp.label.size(); ++i) label += (i ? ", " : "") + comp.label[i].get_str();
            md << "| (" << rep << ") | (" << label << ") | " << comp.size << " |\n";
        }
        md << "\nconsistent " << r.consistent << ", injective " << r.injective << ", surjective " << r.surjective
           << ", additive " << r.additive << "\n\n"
           << (r.ok() ? "PASS" : "FAIL: " + r.failure) << "\n";
        return {md.str(), code};
    }
    return {tagged("pi0", to_json(r)).dump(2) + "\n", code};
}

// ---- verify -------------------------------------------------------------------

std::pair<std::string, int> verify(const Config& c) {
    if (!is_suite(c.suite)) throw UsageError("unknown suite '" + c.suite + "'");
    VerifyOptions o;
    o.seed = resolve_seed(c);
    o.jobs = std::max(1U, c.jobs);
    if (c.input) {
        std::ifstream in(*c.input);
        if (!in) throw UsageError("cannot read " + *c.input);
        try {
            o.input = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw UsageError(*c.input + ": " + e.what());
        }
        std::string kind = o.input->is_object() ? o.input->value("kind", "") : "";
        if (kind != "seft" && kind != "aft" && kind != "deformation")
            throw UsageError(*c.input + ": \"kind\" must be seft, aft or deformation");
    }
    auto reports = run_verify(c.suite, o);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });
    std::string text = c.format == "markdown" ? verify_markdown(c.suite, o.seed, reports)
                                              : verify_json(c.suite, o.seed, reports).dump(2) + "\n";
    return {text, ok ? kOk : kVerificationFailure};
}

void add_common(CLI::App* cmd, Config& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--output", c.output, "Write the report to FILE");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact super Clifford, bordism and field theory computations", "superko"};
    app.require_subcommand(1);

    auto* ko = app.add_subcommand("ko-table", "Groups abs_quotient(n) over a range of n");
    ko->add_option("--n-range", c.n_range, "Range LO..HI within -24..24")->capture_default_str();
    add_common(ko, c);

    auto* ta = app.add_subcommand("tate", "Tate coefficient groups in a window of degrees");
    ta->add_option("--n", c.n, "Degree")->capture_default_str();
    ta->add_option("--k-min", c.k_min)->capture_default_str();
    ta->add_option("--k-max", c.k_max)->capture_default_str();
    ta->add_option("--dim-cap", c.dim_cap, "Largest module dimension explored")->capture_default_str();
    add_common(ta, c);

    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("suite", c.suite, "grassmann, superspace, bordism, fieldtheory, categories, fredholm or all")
        ->required();
    ve->add_option("--seed", c.seed, "Seed (default: SUPERKO_SEED, then 0)");
    ve->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
    ve->add_option("--input", c.input, "Theory data (generator or deformation JSON)");
    add_common(ve, c);

    auto* pz = app.add_subcommand("pi0", "Connected components of the category of submodules");
    pz->add_option("--n", c.n, "Module index")->capture_default_str();
    pz->add_option("--dim-cap", c.dim_cap, "Largest module dimension explored")->capture_default_str();
    add_common(pz, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        out << msg.str();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        return kUsage;
    }

    std::pair<std::string, int> result;
    try {
        if (*ko) result = ko_table(c);
        if (*ta) result = tate(c);
        if (*ve) result = verify(c);
        if (*pz) result = pi0_cmd(c);
    } catch (const UsageError& e) {
        err << "superko: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "superko: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "superko: " << e.what() << "\n";
        return kVerificationFailure;
    }

    if (c.output) {
        std::ofstream f(*c.output, std::ios::binary);
        if (!f) {
            err << "superko: cannot write " << *c.output << "\n";
            return kUsage;
        }
        f << result.first;
    } else {
        out << result.first;
    }
    return result.second;
}

}  // namespace superko::cli
