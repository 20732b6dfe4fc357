// bandix -- certified band index and flat band index bounds for links
// given as braid words, pretzel parameters, or signed Seifert graphs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bandix/report.hpp"

namespace {

using namespace bandix;

const char kUsage[] =
    "usage: bandix <command> [options]\n"
    "\n"
    "commands:\n"
    "  braid <word>     bounds for the closure of a braid word, e.g. \"-1 2 -1 2\"\n"
    "  pretzel <params> bounds for a pretzel link, e.g. \"4,4,4\"\n"
    "  graph <file>     bounds for a signed Seifert graph file (needs --components)\n"
    "  conway <word>    Conway polynomial coefficients of a braid closure\n"
    "\n"
    "options:\n"
    "  --strands N      strand count override for braid input\n"
    "  --genus G        known genus of the link (tightens lower bounds)\n"
    "  --budget K       spanning tree enumeration budget (default 10000)\n"
    "  --components L   boundary component count for graph input\n"
    "  --format F       output format: text (default) or json\n"
    "  --help           print this message\n";

struct Cli {
    std::string command;
    std::string positional;
    bool have_positional = false;
    std::optional<int> strands;
    std::optional<int> genus;
    std::optional<int> components;
    long long budget = 10000;
    RenderFormat format = RenderFormat::text;
    bool help = false;
};

int parse_int_arg(const std::string& flag, const std::string& value) {
    try {
        size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw SyntaxError("flag " + flag + " needs an integer, got '" + value + "'");
    }
}

Cli parse_cli(int argc, char** argv) {
    Cli cli;
    std::vector<std::string> args(argv + 1, argv + argc);
    size_t i = 0;
    if (!args.empty() && args[0] != "--help") {
        cli.command = args[0];
        i = 1;
    }
    auto next_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw SyntaxError("flag " + flag + " needs a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--help") {
            cli.help = true;
        } else if (a == "--strands") {
            cli.strands = parse_int_arg(a, next_value(a));
        } else if (a == "--genus") {
            cli.genus = parse_int_arg(a, next_value(a));
        } else if (a == "--components") {
            cli.components = parse_int_arg(a, next_value(a));
        } else if (a == "--budget") {
            cli.budget = parse_int_arg(a, next_value(a));
        } else if (a == "--format") {
            std::string f = next_value(a);
            if (f == "text")
                cli.format = RenderFormat::text;
            else if (f == "json")
                cli.format = RenderFormat::json;
            else
                throw SyntaxError("unknown format '" + f + "' (expected text or json)");
        } else if (a.rfind("--", 0) == 0) {
            throw SyntaxError("unknown flag '" + a + "'");
        } else if (!cli.have_positional) {
            cli.positional = a;
            cli.have_positional = true;
        } else {
            throw SyntaxError("unexpected argument '" + a + "'");
        }
    }
    return cli;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(const Cli& cli) {
    if (cli.help || cli.command.empty()) {
        std::cout << kUsage;
        return cli.command.empty() && !cli.help ? 1 : 0;
    }
    AnalyzeOptions opts;
    opts.known_genus = cli.genus;
    opts.budget = cli.budget;

    if (cli.command == "braid") {
        if (!cli.have_positional) throw SyntaxError("braid needs a word argument");
        BraidWord w = parse_braid(cli.positional, cli.strands);
        std::cout << render(analyze_braid(w, opts), cli.format);
        return 0;
    }
    if (cli.command == "pretzel") {
        if (!cli.have_positional) throw SyntaxError("pretzel needs a parameter list");
        PretzelSpec spec = parse_pretzel(cli.positional);
        std::cout << render(analyze_pretzel(spec, opts), cli.format);
        return 0;
    }
    if (cli.command == "graph") {
        if (!cli.have_positional) throw SyntaxError("graph needs a file argument");
        if (!cli.components) throw SyntaxError("graph needs --components");
        SignedMultigraph g = parse_graph(read_file(cli.positional));
        std::cout << render(analyze_graph(g, *cli.components, opts), cli.format);
        return 0;
    }
    if (cli.command == "conway") {
        if (!cli.have_positional) throw SyntaxError("conway needs a word argument");
        BraidWord w = parse_braid(cli.positional, cli.strands);
        ConwayPolynomial p = conway_from_seifert(seifert_matrix_from_braid(w));
        if (p.is_zero()) {
            std::cout << "0\n";
        } else {
            for (int d = 0; d <= p.degree(); ++d) {
                if (d) std::cout << ' ';
                std::cout << p.coeff(d);
            }
            std::cout << '\n';
        }
        return 0;
    }
    throw SyntaxError("unknown command '" + cli.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    RenderFormat format = RenderFormat::text;
    try {
        Cli cli = parse_cli(argc, argv);
        format = cli.format;
        return run(cli);
    } catch (const InternalError& e) {
        std::cout << render_error(e, format);
        return 2;
    } catch (const Error& e) {
        std::cout << render_error(e, format);
        return 1;
    } catch (const std::exception& e) {
        std::cout << render_error(InternalError(e.what()), format);
        return 2;
    }
}
