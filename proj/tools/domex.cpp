#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "domex/catalog.hpp"
#include "domex/claims.hpp"
#include "domex/domination.hpp"
#include "domex/excellence.hpp"
#include "domex/formats.hpp"
#include "domex/graph6.hpp"
#include "domex/parallel.hpp"
#include "domex/report.hpp"
#include "domex/trees.hpp"

namespace {

using domex::report::Json;

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputLine {
    std::size_t line_no;
    std::string text;
};

// `-` reads standard input, an existing path reads the file, anything else is one inline graph6 string.
std::vector<InputLine> read_lines(const std::string& source) {
    std::vector<InputLine> out;
    auto slurp = [&](std::istream& in) {
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line == ">>graph6<<") continue;
            out.push_back({no, line});
        }
    };
    if (source == "-") {
        slurp(std::cin);
    } else if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        if (!in) throw InputError("cannot open " + source);
        slurp(in);
    } else {
        out.push_back({0, source});
    }
    return out;
}

std::vector<domex::Param> parse_params(const std::vector<std::string>& names) {
    std::vector<domex::Param> out;
    for (const auto& n : names) {
        auto p = domex::parse_param(n);
        if (!p) throw InputError("unknown parameter '" + n + "'");
        out.push_back(*p);
    }
    return out;
}

std::string parse_failure_message(const domex::ParseError& e, const InputLine& line) {
    std::string msg = "byte " + std::to_string(e.offset()) + ": " + e.reason();
    if (line.line_no) msg = "line " + std::to_string(line.line_no) + ", " + msg;
    return msg;
}

void emit(const Json& results, const std::string& input) { std::cout << domex::report::dump(domex::report::envelope(input, results)); }

int run_analyze(const std::string& source, const std::vector<std::string>& param_names, bool json) {
    auto params = parse_params(param_names.empty() ? std::vector<std::string>{"gamma"} : param_names);
    const auto lines = read_lines(source);
    Json results = Json::array();
    bool input_error = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            const domex::Graph g = domex::from_graph6(lines[i].text);
            results.push_back(domex::report::analyze(i, g, params));
        } catch (const domex::ParseError& e) {
            input_error = true;
            results.push_back(domex::report::parse_failure(i, lines[i].text, parse_failure_message(e, lines[i])));
        }
    }
    if (json) {
        emit(results, source);
    } else {
        for (const auto& r : results) {
            std::cout << "#" << r["index"].get<std::size_t>() << " " << r["graph6"].get<std::string>();
            if (r.contains("error")) {
                std::cout << "  error: " << r["error"].get<std::string>() << "\n";
                continue;
            }
            std::cout << "  n=" << r["order"] << " m=" << r["edges"] << (r["connected"].get<bool>() ? " connected" : "");
            for (const auto& p : r["params"]) {
                std::cout << "  " << p["param"].get<std::string>() << "=";
                if (p.contains("error"))
                    std::cout << "undefined";
                else
                    std::cout << p["value"] << " (" << p["mu_sets"] << " sets"
                              << (p["excellent"].get<bool>() ? ", excellent" : "") << ")";
            }
            std::cout << "\n";
        }
    }
    return input_error ? kExitInputError : kExitPass;
}

int run_family(const std::string& source, const std::string& param_name, bool json) {
    const domex::Param p = parse_params({param_name}).front();
    const auto lines = read_lines(source);
    Json results = Json::array();
    bool input_error = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            const domex::Graph g = domex::from_graph6(lines[i].text);
            try {
                results.push_back(domex::report::family(i, g, domex::excellent_family(g, p)));
            } catch (const domex::UndefinedParameter&) {
                input_error = true;
                Json entry = domex::report::identity(i, g);
                entry["param"] = param_name;
                entry["error"] = "parameter undefined";
                results.push_back(std::move(entry));
            } catch (const std::invalid_argument& e) {
                input_error = true;
                Json entry = domex::report::identity(i, g);
                entry["param"] = param_name;
                entry["error"] = e.what();
                results.push_back(std::move(entry));
            }
        } catch (const domex::ParseError& e) {
            input_error = true;
            results.push_back(domex::report::parse_failure(i, lines[i].text, parse_failure_message(e, lines[i])));
        }
    }
    if (json) {
        emit(results, source);
    } else {
        for (const auto& r : results) {
            std::cout << "#" << r["index"].get<std::size_t>() << " " << r["graph6"].get<std::string>() << "  ";
            if (r.contains("error")) {
                std::cout << "error: " << r["error"].get<std::string>() << "\n";
                continue;
            }
            std::cout << r["param"].get<std::string>() << "=" << r["value"] << " "
                      << (r["excellent"].get<bool>() ? "excellent" : "not excellent") << "  members:";
            for (const auto& m : r["members"]) std::cout << " " << m["canonical"].get<std::string>();
            std::cout << "\n";
        }
    }
    return input_error ? kExitInputError : kExitPass;
}

int run_verify(const std::string& suite_name, bool run_long, bool timings, bool json) {
    const auto suite = domex::claims::parse_suite(suite_name);
    if (!suite) throw InputError("unknown suite '" + suite_name + "'");
    domex::claims::Context ctx;
    ctx.run_long = run_long;
    const auto reports = domex::claims::run_suite(*suite, ctx);
    if (json) {
        Json results = Json::array();
        for (const auto& r : reports) {
            Json entry;
            entry["claim_id"] = r.id;
            entry["anchor"] = r.anchor;
            entry["criterion"] = r.criterion;
            entry["status"] = std::string(domex::claims::status_name(r.status));
            entry["expected"] = r.expected;
            entry["computed"] = r.computed;
            if (timings) entry["runtime_ms"] = r.runtime_ms;
            results.push_back(std::move(entry));
        }
        emit(results, "suite:" + suite_name);
    } else {
        for (const auto& r : reports) {
            std::cout << domex::claims::status_name(r.status) << "  " << r.id << "  (" << r.anchor << ")";
            if (timings) std::cout << "  " << static_cast<long>(r.runtime_ms) << " ms";
            std::cout << "\n";
            if (r.status == domex::claims::Status::fail)
                std::cout << "    expected: " << r.expected << "\n    computed: " << r.computed << "\n";
        }
    }
    return domex::claims::all_passed(reports) ? kExitPass : kExitClaimFailure;
}

int parse_count(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw InputError("bad " + what + " '" + text + "'");
}

// "trees:n", "all:n", "all-connected:n", "regular:n:k", "regular-connected:n:k"
domex::Catalog generate(const std::vector<std::string>& spec) {
    if (spec.empty()) throw InputError("empty generator spec");
    const std::string& kind = spec[0];
    auto need = [&](std::size_t args) {
        if (spec.size() != args + 1) throw InputError("generator '" + kind + "' takes " + std::to_string(args) + " argument(s)");
    };
    try {
        if (kind == "trees") {
            need(1);
            domex::Catalog c;
            c.source = "trees:" + spec[1];
            for (auto& t : domex::enumerate_trees(parse_count(spec[1], "order"))) {
                c.keys.push_back(domex::canonical_key(t));
                c.graphs.push_back(std::move(t));
            }
            return c;
        }
        if (kind == "all" || kind == "all-connected") {
            need(1);
            return domex::generate_all_graphs(parse_count(spec[1], "order"), kind == "all-connected");
        }
        if (kind == "regular" || kind == "regular-connected") {
            need(2);
            return domex::generate_regular(parse_count(spec[1], "order"), parse_count(spec[2], "degree"),
                                           kind == "regular-connected");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown generator '" + kind + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) out.push_back(part);
    return out;
}

Json identities(const domex::Catalog& c) {
    Json results = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) results.push_back(domex::report::identity(i, c.graphs[i]));
    return results;
}

int run_gen(std::vector<std::string> spec, bool connected, const std::string& save, bool json) {
    if (connected && !spec.empty() && (spec[0] == "all" || spec[0] == "regular")) spec[0] += "-connected";
    const domex::Catalog c = generate(spec);
    if (!save.empty()) domex::save_catalog(c, save);
    if (json) {
        emit(identities(c), c.source);
    } else {
        for (const auto& g : c.graphs) std::cout << domex::to_graph6(g) << "\n";
    }
    return kExitPass;
}

domex::Catalog open_catalog(const std::string& source) {
    if (source == "-") return domex::parse_catalog(std::cin, "stdin");
    if (std::filesystem::is_regular_file(source)) return domex::load_catalog(source);
    return generate(split(source, ':'));
}

struct SearchOptions {
    std::vector<std::string> where;
    std::string pattern;
    std::string pattern_param = "gamma";
    int regular = -1;
    bool connected = false;
    std::string family;
};

int run_search(const std::string& source, const SearchOptions& opt, bool json) {
    domex::Query q;
    for (const auto& w : opt.where) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw InputError("constraint '" + w + "' is not of the form param=value");
        q.params.push_back({parse_params({w.substr(0, eq)}).front(), parse_count(w.substr(eq + 1), "value")});
    }
    if (!opt.pattern.empty()) {
        try {
            q.pattern = domex::from_graph6(opt.pattern);
        } catch (const domex::ParseError& e) {
            throw InputError(std::string("pattern: ") + e.what());
        }
        q.pattern_param = parse_params({opt.pattern_param}).front();
    }
    if (opt.regular >= 0) q.regular = opt.regular;
    if (opt.connected) q.connected = true;
    if (!opt.family.empty()) q.family = parse_params({opt.family}).front();

    const domex::Catalog c = open_catalog(source);
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
    const auto found = domex::search(c, q);
    if (json) {
        Json results = Json::array();
        for (const auto& m : found) results.push_back(domex::report::match(c, m));
        emit(results, c.source);
    } else {
        for (const auto& m : found) {
            std::cout << "#" << m.index << " " << domex::to_graph6(c.graphs[m.index]);
            for (const auto& [p, v] : m.values) std::cout << "  " << domex::param_name(p) << "=" << v;
            std::cout << "\n";
        }
        std::cout << found.size() << " of " << c.size() << " graphs match\n";
    }
    return kExitPass;
}

int run_convert(const std::string& source, const std::string& from, const std::string& to, int base) {
    std::vector<domex::Graph> graphs;
    if (from == "graph6") {
        for (const auto& line : read_lines(source)) {
            try {
                graphs.push_back(domex::from_graph6(line.text));
            } catch (const domex::ParseError& e) {
                throw InputError(parse_failure_message(e, line));
            }
        }
    } else if (from == "adjlist") {
        try {
            if (source == "-") {
                graphs = domex::parse_adjacency_lists(std::cin, base);
            } else {
                std::ifstream in(source);
                if (!in) throw InputError("cannot open " + source);
                graphs = domex::parse_adjacency_lists(in, base);
            }
        } catch (const domex::ParseError& e) {
            throw InputError(e.what());
        }
    } else {
        throw InputError("unknown input format '" + from + "'");
    }
    for (const auto& g : graphs) {
        if (to == "graph6") {
            std::cout << domex::to_graph6(g) << "\n";
        } else if (to == "canonical") {
            if (g.order() > domex::kMaxCanonOrder) throw InputError("canonical form needs order <= 12");
            std::cout << domex::canonical_key(g).graph6 << "\n";
        } else if (to == "adjlist") {
            std::cout << domex::to_adjacency_list(g, base) << "\n";
        } else if (to == "edges") {
            std::cout << domex::to_edge_list(g) << "\n";
        } else {
            throw InputError("unknown output format '" + to + "'");
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact domination parameters, excellence and excellent families of small graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", domex::report::tool_version());

    int jobs = 0;
    std::string output;
    app.add_option("--jobs", jobs, "Worker threads (default: DOMEX_JOBS or all cores)");
    app.add_option("--output", output, "Output format (gen defaults to graph6 lines, everything else to json)")->check(CLI::IsMember({"json", "text"}));

    std::string input;
    std::vector<std::string> params;
    auto* analyze = app.add_subcommand("analyze", "Parameter values, optimal-set counts and excellence per graph");
    analyze->fallthrough();
    analyze->add_option("input", input, "graph6 file, '-' for stdin, or an inline graph6 string")->required();
    analyze->add_option("--param", params, "Parameter (repeatable; default gamma)");

    std::string family_param = "gamma";
    auto* family = app.add_subcommand("family", "Excellent family with witnesses");
    family->fallthrough();
    family->add_option("input", input, "graph6 file, '-' for stdin, or an inline graph6 string")->required();
    family->add_option("--param", family_param, "Parameter");

    std::string suite = "paper";
    bool run_long = false;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run the claim suite");
    verify->fallthrough();
    verify->add_option("--suite", suite, "quick, paper or long")->check(CLI::IsMember({"quick", "paper", "long"}));
    verify->add_flag("--long", run_long, "Also run long-running claims");
    verify->add_flag("--timings", timings, "Report per-claim runtimes");

    std::vector<std::string> gen_spec;
    bool gen_connected = false;
    std::string save;
    auto* gen = app.add_subcommand("gen", "Generate a catalog: trees N | all N | regular N K");
    gen->fallthrough();
    gen->add_option("spec", gen_spec, "Generator and its arguments")->required()->expected(2, 3);
    gen->add_flag("--connected", gen_connected, "Connected graphs only");
    gen->add_option("--save", save, "Also write the catalog and its JSON sidecar to this path");

    SearchOptions search_opt;
    std::string search_source;
    auto* search = app.add_subcommand("search", "Search a catalog file or generator spec (e.g. regular:9:4)");
    search->fallthrough();
    search->add_option("source", search_source, "Catalog path, '-' or generator spec")->required();
    search->add_option("--where", search_opt.where, "Constraint param=value (repeatable)");
    search->add_option("--excellent-for", search_opt.pattern, "Require H-excellence for this graph6 pattern");
    search->add_option("--param", search_opt.pattern_param, "Parameter for --excellent-for");
    search->add_option("--regular", search_opt.regular, "Required degree");
    search->add_flag("--connected", search_opt.connected, "Connected graphs only");
    search->add_option("--family", search_opt.family, "Attach the excellent family under this parameter");

    std::string from = "graph6";
    std::string to;
    int base = 0;
    auto* convert = app.add_subcommand("convert", "Convert between graph6 and adjacency lists");
    convert->fallthrough();
    convert->add_option("input", input, "Input file, '-' or an inline graph6 string")->required();
    convert->add_option("--from", from, "graph6 or adjlist")->check(CLI::IsMember({"graph6", "adjlist"}));
    convert->add_option("--to", to, "graph6, canonical, adjlist or edges (default: the other of graph6/adjlist)")
        ->check(CLI::IsMember({"graph6", "canonical", "adjlist", "edges"}));
    convert->add_option("--base", base, "Index of the first vertex in adjacency lists")->check(CLI::IsMember({0, 1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    domex::parallel::apply_env_threads();
    if (jobs > 0) domex::parallel::set_threads(jobs);
    const bool json = output != "text";

    try {
        if (*analyze) return run_analyze(input, params, json);
        if (*family) return run_family(input, family_param, json);
        if (*verify) return run_verify(suite, run_long, timings, json);
        if (*gen) return run_gen(gen_spec, gen_connected, save, output == "json");
        if (*search) return run_search(search_source, search_opt, json);
        if (*convert) return run_convert(input, from, to.empty() ? (from == "adjlist" ? "graph6" : "adjlist") : to, base);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const domex::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
