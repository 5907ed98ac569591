#include "mixedmoore/cli.hpp"

#include "mixedmoore/algebra.hpp"
#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/core.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/spectra.hpp"
#include "mixedmoore/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace mixedmoore::cli {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Usage("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Usage("cannot write " + path);
    f << text;
}

// Text format when the first token is "mixed", otherwise the first
// non-empty line as digraph6.
MixedGraph load_graph(const std::string& path)
{
    const std::string text = slurp(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        if (line.compare(first, 5, "mixed") == 0)
            return codec::parse_text(text);
        const auto last = line.find_last_not_of(" \t\r");
        return codec::decode_digraph6(std::string_view(line).substr(first, last - first + 1));
    }
    throw Usage(path + " holds no graph");
}

std::string show(const std::optional<int>& d)
{
    return d ? std::to_string(*d) : "inf";
}

families::LabeledMixedGraph construct(const std::string& family, int n, int d)
{
    auto from_digraph = [](const ColoredDigraph& g) {
        families::LabeledMixedGraph out;
        out.graph = g.as_mixed();
        for (int v = 0; v < g.order(); ++v)
            out.labels.push_back(std::to_string(v));
        return out;
    };
    if (family == "E")
        return families::build_E(n);
    if (family == "F")
        return families::build_F(n);
    if (family == "Fnum")
        return families::build_F_numeric(n);
    if (family == "Fstar")
        return families::build_Fstar(n);
    if (family == "FstarAlt")
        return families::build_Fstar_alt(n);
    if (family == "Fprime")
        return families::build_Fprime(n);
    if (family == "G")
        return families::build_G(n);
    if (family == "Gplus")
        return families::build_Gplus(n);
    if (family == "H-K3")
        return families::build_H(n, families::symmetric_cycle(3));
    if (family == "debruijn")
        return from_digraph(families::de_bruijn(d, n));
    if (family == "kautz")
        return from_digraph(families::kautz(d, n));
    throw Usage("unknown family '" + family + "'");
}

std::vector<int> parse_elements(const algebra::FiniteGroup& g, const std::string& list)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto end = std::min(list.find(';', start), list.size());
        const std::string item = list.substr(start, end - start);
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(g.element(item));
        start = end + 1;
    }
    return out;
}

std::vector<Arc> parse_arcs(const std::string& text)
{
    std::vector<Arc> arcs;
    std::string digits;
    for (char c : text)
        digits += std::isdigit(static_cast<unsigned char>(c)) ? c : ' ';
    std::istringstream in(digits);
    std::vector<int> nums;
    for (int x; in >> x;)
        nums.push_back(x);
    if (nums.size() % 2 != 0)
        throw Usage("--seed-arcs needs pairs, e.g. \"(0,2),(1,5)\"");
    for (std::size_t i = 0; i < nums.size(); i += 2)
        arcs.push_back({nums[i], nums[i + 1]});
    return arcs;
}

std::string timing(double seconds)
{
    std::ostringstream s;
    s << "time_seconds=" << std::fixed << std::setprecision(3) << seconds << '\n';
    return s.str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct, search and verify (1,1)-mixed graphs of given diameter", "mixedmoore"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool no_timing = false;
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", no_timing, "omit timing lines");

    int k = 0, k_to = 0, r = 1, z = 1;
    auto* bound = app.add_subcommand("bound", "Moore bound, defect and best known bounds");
    bound->add_option("--k", k, "diameter")->required();
    bound->add_option("--to", k_to, "print every diameter from --k to this one");
    bound->add_option("--r", r, "undirected degree");
    bound->add_option("--z", z, "directed degree");

    std::string family, format = "text", out_path, in_path;
    int n = 0, d = 2;
    bool labels = false;
    auto* cons = app.add_subcommand("construct", "build a family member");
    cons->add_option("--family", family, "E F Fnum Fstar FstarAlt Fprime G Gplus H-K3 debruijn kautz")->required();
    cons->add_option("--n", n, "family parameter")->required();
    cons->add_option("--d", d, "alphabet size for debruijn/kautz");
    cons->add_option("--format", format, "text or digraph6")->check(CLI::IsMember({"text", "digraph6"}));
    cons->add_option("--out", out_path, "output file (default stdout)");
    cons->add_flag("--labels", labels, "write vertex labels as comments (text format)");

    auto* diam = app.add_subcommand("diameter", "diameter of a graph file");
    diam->add_option("--in", in_path, "text or digraph6 file")->required();
    bool details = false;
    diam->add_flag("--details", details, "also print order, regularity, digons and loops");

    auto* spec = app.add_subcommand("spectrum", "characteristic polynomial and spectrum class");
    spec->add_option("--in", in_path, "text or digraph6 file")->required();

    std::string mode, seed_arcs, out_dir;
    int order = 0, shard_depth = 2;
    std::uint64_t budget = 0;
    auto* srch = app.add_subcommand("search", "exhaustive searches for extremal graphs");
    srch->add_option("--k", k, "diameter");
    srch->add_option("--order", order, "order for the generic search");
    srch->add_option("--seed-arcs", seed_arcs, "fixed arcs, e.g. \"(0,2),(1,5),(5,7)\"");
    srch->add_option("--mode", mode, "almost-moore order16 order14 generic")
        ->check(CLI::IsMember({"almost-moore", "order16", "order14", "generic"}));
    srch->add_option("--budget", budget, "cap on examined candidates (0 = none)");
    srch->add_option("--shard-depth", shard_depth, "arcs fixed per work unit");
    srch->add_option("--out", out_dir, "directory for survivors.d6");

    bool decode = false, encode = false, bare = false;
    auto* codec_cmd = app.add_subcommand("codec", "convert between digraph6 and the text format");
    auto* dec_flag = codec_cmd->add_flag("--decode", decode, "digraph6 to text");
    auto* enc_flag = codec_cmd->add_flag("--encode", encode, "text to digraph6");
    dec_flag->excludes(enc_flag);
    codec_cmd->add_option("--in", in_path, "input file")->required();
    codec_cmd->add_option("--out", out_path, "output file (default stdout)");
    codec_cmd->add_flag("--bare", bare, "omit the '&' prefix when encoding");

    std::string group, s1, s2, base_path;
    int target = 0;
    auto* cay = app.add_subcommand("cayley", "Cayley mixed graphs");
    cay->add_option("--group", group, "group spec, e.g. dihedral:14 or semidirect:9:6:2")->required();
    cay->add_option("--s1", s1, "edge generators separated by ';'");
    cay->add_option("--s2", s2, "arc generators separated by ';'");
    cay->add_option("--search", target, "list generator pairs with diameter at most this");
    cay->add_option("--out", out_path, "write the graph (text format)");

    auto* lft = app.add_subcommand("lift", "lift a voltage base graph");
    lft->add_option("--group", group, "group spec")->required();
    lft->add_option("--base", base_path, "voltage base file, or 'fig7'")->required();
    lft->add_option("--out", out_path, "write the lift (text format)");

    std::optional<std::uint64_t> rng_seed;
    int keep = 5;
    std::uint64_t vbudget = 100000;
    auto* vs = app.add_subcommand("voltage-search", "search voltage assignments of a base shape");
    vs->add_option("--group", group, "group spec")->required();
    vs->add_option("--base", base_path, "base shape file, or 'fig7' / 'fig8'")->required();
    vs->add_option("--target", target, "count lifts with diameter at most this");
    vs->add_option("--budget", vbudget, "assignments to examine");
    vs->add_option("--rng-seed", rng_seed, "seed, required when sampling");
    vs->add_option("--keep", keep, "assignments to report");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "rerun the reproduction suites");
    ver->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto base_text = [&](const std::string& p) -> std::string {
        if (p == "fig7")
            return std::string(reference::fig7_base);
        if (p == "fig8")
            return std::string(reference::fig8_shape);
        return slurp(p);
    };

    try {
        if (*bound) {
            const int last = k_to > 0 ? k_to : k;
            if ((r != 1 || z != 1) && last != k)
                throw Usage("--to is only available for r = z = 1");
            out << std::left << std::setw(4) << "k" << std::setw(12) << "moore" << std::setw(8) << "defect"
                << std::setw(10) << "upper" << std::setw(10) << "lower" << "source\n";
            std::ostringstream kv;
            for (int kk = k; kk <= last; ++kk) {
                const auto rep = bounds::report(kk, r, z);
                const bool full = r == 1 && z == 1 && kk >= 2;
                out << std::setw(4) << kk << std::setw(12) << rep.moore.str() << std::setw(8)
                    << (full ? rep.defect_lower.str() : "-") << std::setw(10) << (full ? rep.upper.str() : "-")
                    << std::setw(10) << (full ? rep.lower.str() : "-") << (full ? rep.lower_source : "-") << '\n';
                kv << "k=" << kk << "\nr=" << r << "\nz=" << z << "\nmoore=" << rep.moore << '\n';
                if (full)
                    kv << "defect=" << rep.defect_lower << "\nupper=" << rep.upper << "\nlower=" << rep.lower
                       << "\nlower_source=" << rep.lower_source << '\n';
            }
            out << kv.str();
            return 0;
        }
        if (*cons) {
            const auto g = construct(family, n, d);
            std::string text;
            if (format == "digraph6") {
                text = codec::encode_digraph6(g.graph) + "\n";
            } else {
                if (labels) {
                    std::ostringstream s;
                    for (std::size_t v = 0; v < g.labels.size(); ++v)
                        s << "# " << v << ' ' << g.labels[v] << '\n';
                    text = s.str();
                }
                text += codec::to_text(g.graph);
            }
            emit(out_path, text, out);
            return 0;
        }
        if (*diam) {
            const auto g = load_graph(in_path);
            out << show(diameter(g, jobs)) << '\n';
            if (details) {
                const auto dl = digons_and_loops(g);
                out << "order=" << g.order() << "\ntotally_regular_1_1=" << (is_totally_regular(g, 1, 1) ? 1 : 0)
                    << "\ndigons=" << dl.digons << "\nloops=" << dl.loops << '\n';
            }
            return 0;
        }
        if (*spec) {
            const auto g = load_graph(in_path);
            const auto cp = spectra::char_poly(g);
            out << "char_poly=" << cp.to_string() << '\n';
            if (g.order() == 14) {
                const auto c = spectra::classify(cp);
                out << "class=" << (c ? std::to_string(*c) : "none") << '\n';
            }
            return 0;
        }
        if (*srch) {
            search::SearchOptions opts;
            opts.jobs = jobs;
            opts.shard_depth = shard_depth;
            opts.budget = budget;
            if (mode.empty())
                mode = order > 0 ? "generic" : "almost-moore";
            search::SearchOutcome res;
            if (mode == "almost-moore") {
                if (k < 2)
                    throw Usage("almost-moore needs --k");
                res = search::search_almost_moore(k, opts);
            } else if (mode == "order16") {
                res = search::search_order16_k4(opts);
            } else if (mode == "order14") {
                res = search::search_order14_k4(opts);
            } else {
                if (k < 1 || order < 2)
                    throw Usage("generic search needs --k and --order");
                res = search::search_generic(order, k, parse_arcs(seed_arcs), opts);
            }
            out << "mode=" << mode << "\norder=" << res.order << "\nk=" << res.k
                << "\nremoval_cases=" << res.removal_cases << "\nmatching_completions=" << res.matching_completions
                << "\nexamined=" << res.examined << "\nsurvivors=" << res.survivors.size()
                << "\nbudget_exhausted=" << (res.budget_exhausted ? 1 : 0) << '\n';
            if (!no_timing)
                out << timing(res.seconds);
            std::string lines;
            for (const auto& s : res.survivors)
                lines += codec::encode_digraph6(s.graph) + "\n";
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                emit((std::filesystem::path(out_dir) / "survivors.d6").string(), lines, out);
            } else {
                out << lines;
            }
            if (res.budget_exhausted) {
                err << "warning: budget exhausted, survivor list is partial\n";
                return 1;
            }
            return 0;
        }
        if (*codec_cmd) {
            if (decode == encode)
                throw Usage("choose exactly one of --decode and --encode");
            if (decode)
                emit(out_path, codec::to_text(load_graph(in_path)), out);
            else
                emit(out_path, codec::encode_digraph6(load_graph(in_path), !bare) + "\n", out);
            return 0;
        }
        if (*cay) {
            const auto g = algebra::parse_group(group);
            if (target > 0) {
                const auto hits = algebra::cayley_search(g, target, jobs);
                out << "group=" << g.name() << "\norder=" << g.order() << "\nclasses=" << hits.size() << '\n';
                for (const auto& h : hits)
                    out << "s1=" << g.element_name(h.involution) << " s2=" << g.element_name(h.generator)
                        << " diameter=" << h.diameter << '\n';
                return 0;
            }
            const auto graph = algebra::cayley_mixed(g, parse_elements(g, s1), parse_elements(g, s2));
            out << "group=" << g.name() << "\norder=" << graph.order()
                << "\ntotally_regular_1_1=" << (is_totally_regular(graph, 1, 1) ? 1 : 0)
                << "\ndiameter=" << show(diameter(graph, jobs)) << '\n';
            if (!out_path.empty())
                emit(out_path, codec::to_text(graph), out);
            return 0;
        }
        if (*lft) {
            const auto g = algebra::parse_group(group);
            const auto vb = algebra::parse_voltage_base(base_text(base_path), g);
            const auto graph = algebra::lift(vb, g);
            out << "group=" << g.name() << "\norder=" << graph.order()
                << "\ntotally_regular_1_1=" << (is_totally_regular(graph, 1, 1) ? 1 : 0)
                << "\ndiameter=" << show(diameter(graph, jobs)) << '\n';
            if (!out_path.empty())
                emit(out_path, codec::to_text(graph), out);
            return 0;
        }
        if (*vs) {
            const auto g = algebra::parse_group(group);
            const auto vb = algebra::parse_voltage_base(base_text(base_path), g);
            algebra::VoltageSearchOptions opts;
            opts.target_k = target;
            opts.budget = vbudget;
            opts.seed = rng_seed;
            opts.keep = keep;
            opts.jobs = jobs;
            const auto t0 = std::chrono::steady_clock::now();
            const auto res = algebra::voltage_search(vb, g, opts);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            out << "group=" << g.name() << "\nspace=" << res.space_size << "\nexamined=" << res.examined
                << "\nexhaustive=" << (res.exhaustive ? 1 : 0) << "\nbudget_exhausted=" << (res.budget_exhausted ? 1 : 0)
                << '\n';
            if (target > 0)
                out << "hits_at_most_" << target << '=' << res.hits << '\n';
            if (!no_timing)
                out << timing(secs);
            for (const auto& a : res.best) {
                algebra::VoltageBaseGraph shown = vb;
                for (std::size_t i = 0; i < shown.carriers.size(); ++i)
                    shown.carriers[i].voltage = a.voltages[i];
                out << "# diameter=" << show(a.diameter) << " regular=" << (a.regular ? 1 : 0) << '\n'
                    << algebra::format_voltage_base(shown, g);
            }
            return 0;
        }
        if (*ver) {
            std::vector<std::string> names;
            if (suite == "all")
                names = verify::suite_names();
            else
                names.push_back(suite);
            bool all = true;
            for (const auto& name : names) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto rep = verify::run_suite(name, jobs);
                out << verify::format_report(rep);
                if (!no_timing)
                    out << timing(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
                all = all && rep.passed();
            }
            return all ? 0 : 1;
        }
    } catch (const Usage& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace mixedmoore::cli
