#include "mixedmoore/verify.hpp"

#include "mixedmoore/algebra.hpp"
#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace mixedmoore::verify {

namespace {

class Builder {
public:
    explicit Builder(std::string name) { report_.name = std::move(name); }

    template <typename A, typename B>
    void eq(const std::string& what, const A& expected, const B& observed)
    {
        add(what, str(expected), str(observed));
    }

    void truth(const std::string& what, bool observed) { add(what, "true", observed ? "true" : "false"); }

    SuiteReport take() { return std::move(report_); }

private:
    template <typename T>
    static std::string str(const T& v)
    {
        if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_convertible_v<T, std::string>) {
            return std::string(v);
        } else {
            std::ostringstream out;
            out << v;
            return out.str();
        }
    }

    static std::string str(const std::optional<int>& v) { return v ? std::to_string(*v) : "inf"; }

    void add(const std::string& what, std::string expected, std::string observed)
    {
        const bool pass = expected == observed;
        report_.checks.push_back({what, std::move(expected), std::move(observed), pass});
    }

    SuiteReport report_;
};

std::string join(const std::vector<long long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::optional<int> eccentricity(const MixedGraph& g, int v)
{
    return bfs(g, v).eccentricity();
}

std::vector<MixedGraph> table2_graphs()
{
    std::vector<MixedGraph> out;
    for (auto s : reference::order14_diameter4)
        out.push_back(codec::decode_digraph6(s));
    return out;
}

MixedGraph cayley_d7()
{
    const auto d = algebra::dihedral(14);
    return algebra::cayley_mixed(d, {d.element("Ref(0)")}, {d.element("Rot(1)")});
}

MixedGraph line_c7()
{
    return digons_to_edges(families::line_digraph(families::symmetric_cycle(7)).as_mixed());
}

// Composition a after b of index maps.
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = a[b[i]];
    return out;
}

SuiteReport suite_table1()
{
    Builder b("table1");
    for (const auto& row : reference::search_space_table)
        b.eq("N(" + std::to_string(row.k) + ")", row.count, bounds::search_space_bound(row.k));
    b.eq("D_5", 44, bounds::derangements(5));
    b.eq("D_8", 14833, bounds::derangements(8));
    b.eq("pm(6)", 15, bounds::perfect_matchings(6));
    b.eq("pm(7)", 0, bounds::perfect_matchings(7));
    return b.take();
}

SuiteReport suite_table2()
{
    Builder b("table2");
    const auto graphs = table2_graphs();
    int order_ok = 0, diam_ok = 0, regular = 0, digon_free = 0, roundtrip = 0;
    std::set<CanonicalForm> forms;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        order_ok += g.order() == 14;
        diam_ok += diameter(g) == std::optional<int>(4);
        regular += is_totally_regular(g, 1, 1);
        digon_free += digons_and_loops(g).digons == 0;
        roundtrip += codec::encode_digraph6(g, false) == reference::order14_diameter4[i];
        forms.insert(canonical_form(g));
    }
    b.eq("strings decoded", 27, graphs.size());
    b.eq("order 14", 27, order_ok);
    b.eq("diameter 4", 27, diam_ok);
    b.eq("totally (1,1)-regular", 27, regular);
    b.eq("digon-free", 27, digon_free);
    b.eq("bare round trip byte-identical", 27, roundtrip);
    b.eq("distinct canonical forms", 27, forms.size());
    b.truth("first string is Cay(D7,{s},{r})", are_isomorphic(graphs.front(), cayley_d7()));
    return b.take();
}

SuiteReport suite_table3()
{
    Builder b("table3");
    std::vector<long long> sizes(6, 0);
    int unclassified = 0, agree = 0;
    for (const auto& g : table2_graphs()) {
        const auto cp = spectra::char_poly(g);
        agree += cp == spectra::char_poly_interpolated(g);
        if (auto c = spectra::classify(cp))
            ++sizes[*c - 1];
        else
            ++unclassified;
    }
    b.eq("class sizes", "9,6,5,4,2,1", join(sizes));
    b.eq("unclassified", 0, unclassified);
    b.eq("trace method agrees with interpolation", 27, agree);
    for (const auto& cls : spectra::spectrum_classes())
        b.eq("class " + std::to_string(cls.id) + " template degree", 14, cls.product().degree());
    return b.take();
}

SuiteReport suite_table4()
{
    Builder b("table4");
    for (const auto& row : reference::bounds_table) {
        const std::string k = std::to_string(row.k);
        b.eq("M(1,1," + k + ")", row.moore, bounds::moore_11(row.k));
        b.eq("upper(" + k + ")", row.upper, bounds::upper_bound(row.k));
        b.eq("lower(" + k + ")", row.lower, bounds::lower_bound(row.k));
    }
    b.eq("M(3,1,2)", 18, bounds::moore_mixed(3, 1, 2));
    for (int k = 1; k <= 6; ++k)
        b.eq("delta(" + std::to_string(k) + ")", std::vector<int>{0, 1, 1, 2, 3, 5}[k - 1], bounds::defect_lower(k));
    return b.take();
}

SuiteReport suite_families()
{
    Builder b("families");
    for (int n = 2; n <= 6; ++n) {
        const auto e = families::build_E(n);
        const bool odd = bounds::fibonacci(n) % 2 == 1;
        const BigInt m = bounds::moore_11(n);
        const std::string tag = "E(" + std::to_string(n) + ")";
        b.eq(tag + " order", odd ? BigInt(m + 1) : m, e.graph.order());
        b.eq(tag + " diameter", std::optional<int>(odd ? 2 * n + 1 : 2 * n), diameter(e.graph));
    }
    for (int n = 2; n <= 8; ++n) {
        const auto f = families::build_F(n).graph;
        const std::string tag = "F(" + std::to_string(n) + ")";
        b.eq(tag + " order", 3 << n, f.order());
        b.eq(tag + " diameter", std::optional<int>(2 * n), diameter(f));
    }
    for (int n = 2; n <= 6; ++n)
        b.truth("F(" + std::to_string(n) + ") ~ F[" + std::to_string(n) + "]",
            are_isomorphic(families::build_F(n).graph, families::build_F_numeric(n).graph));
    for (int n = 3; n <= 5; ++n) {
        const auto g = families::build_Fstar(n).graph;
        const std::string tag = "F*(" + std::to_string(n) + ")";
        b.truth(tag + " totally regular", is_totally_regular(g, 1, 1));
        b.eq(tag + " digons", 3, digons_and_loops(g).digons);
        b.eq(tag + " automorphisms", 6, automorphism_count(g));
    }
    const auto kautz22 = digons_to_edges(families::kautz(2, 2).as_mixed());
    b.truth("F'(2) ~ K(2,2)", are_isomorphic(families::build_Fprime(2).graph, kautz22));
    b.eq("F'(3) diameter", std::optional<int>(5), diameter(families::build_Fprime(3).graph));
    b.eq("F'(4) order", 42, families::build_Fprime(4).graph.order());
    b.eq("F'(4) diameter", std::optional<int>(7), diameter(families::build_Fprime(4).graph));
    b.eq("F'(5) diameter", std::optional<int>(10), diameter(families::build_Fprime(5).graph));
    b.eq("F'(6) diameter", std::optional<int>(12), diameter(families::build_Fprime(6).graph));
    for (int n = 2; n <= 10; ++n) {
        const auto g = families::build_G(n).graph;
        const std::string tag = "G(" + std::to_string(n) + ")";
        b.eq(tag + " order", (2 << n) - 4, g.order());
        b.eq(tag + " diameter", std::optional<int>(2 * n - 1), diameter(g));
        b.truth(tag + " totally regular", is_totally_regular(g, 1, 1));
    }
    const auto k3 = families::symmetric_cycle(3);
    for (int n = 3; n <= 5; ++n) {
        const auto h = families::build_H(n, k3).graph;
        const std::string tag = "H" + std::to_string(n) + "(K3)";
        b.eq(tag + " order", 3 << (n - 1), h.order());
        b.eq(tag + " digons", 0, digons_and_loops(h).digons);
        b.truth(tag + " contraction ~ K(2," + std::to_string(n - 1) + ")",
            are_isomorphic(contract_edges(h).as_mixed(), families::kautz(2, n - 1).as_mixed()));
    }
    b.eq("H3(K3) diameter", std::optional<int>(5), diameter(families::build_H(3, k3).graph));
    b.eq("H4(K3) diameter", std::optional<int>(6), diameter(families::build_H(4, k3).graph));
    b.truth("L(C7) ~ Cay(D7)", are_isomorphic(line_c7(), cayley_d7()));
    return b.take();
}

SuiteReport suite_gplus()
{
    Builder b("gplus");
    {
        const auto gp = families::build_Gplus(2);
        std::vector<int> idx;
        for (auto label : reference::gplus2_order)
            idx.push_back(gp.index_of(label));
        const auto a = adjacency_matrix(gp.graph);
        bool same = true, same4 = true;
        std::vector<std::vector<long long>> p(8, std::vector<long long>(8, 0));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                same = same && a[idx[i]][idx[j]] == reference::gplus2_adjacency[i][j];
        // A^4 in the printed order.
        std::vector<std::vector<long long>> m(8, std::vector<long long>(8, 0));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                m[i][j] = a[idx[i]][idx[j]];
        p = m;
        for (int step = 1; step < 4; ++step) {
            std::vector<std::vector<long long>> q(8, std::vector<long long>(8, 0));
            for (int i = 0; i < 8; ++i)
                for (int t = 0; t < 8; ++t)
                    for (int j = 0; j < 8; ++j)
                        q[i][j] += p[i][t] * m[t][j];
            p = std::move(q);
        }
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                same4 = same4 && p[i][j] == reference::gplus2_fourth_power[i][j];
        b.truth("G+(2) adjacency equals printed A", same);
        b.truth("G+(2) fourth power equals printed A^4", same4);
    }
    for (int n = 2; n <= 6; ++n) {
        const auto a = adjacency_matrix(families::build_Gplus(n).graph);
        const std::size_t sz = a.size();
        std::vector<std::vector<std::uint8_t>> reach(sz, std::vector<std::uint8_t>(sz, 0));
        for (std::size_t i = 0; i < sz; ++i)
            reach[i][i] = 1;
        for (int step = 0; step < 2 * n; ++step) {
            std::vector<std::vector<std::uint8_t>> next(sz, std::vector<std::uint8_t>(sz, 0));
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t t = 0; t < sz; ++t)
                    if (reach[i][t])
                        for (std::size_t j = 0; j < sz; ++j)
                            if (a[t][j])
                                next[i][j] = 1;
            reach = std::move(next);
        }
        bool positive = true;
        for (const auto& row : reach)
            for (auto x : row)
                positive = positive && x;
        b.truth("A^" + std::to_string(2 * n) + "(G+(" + std::to_string(n) + ")) > 0", positive);
    }
    for (int n = 2; n <= 8; ++n) {
        const auto gp = families::build_Gplus(n);
        const std::string zeros(n, '0'), ones(n, '1');
        const std::string tag = "G+(" + std::to_string(n) + ")";
        b.eq(tag + " diameter", std::optional<int>(2 * n), diameter(gp.graph));
        b.eq(tag + " ecc 0|0..0", std::optional<int>(2 * n), eccentricity(gp.graph, gp.index_of("0|" + zeros)));
        b.eq(tag + " ecc 0|1..1", std::optional<int>(2 * n), eccentricity(gp.graph, gp.index_of("0|" + ones)));
        b.eq(tag + " ecc 1|0..0", std::optional<int>(2 * n - 1), eccentricity(gp.graph, gp.index_of("1|" + zeros)));
        b.eq(tag + " ecc 1|1..1", std::optional<int>(2 * n - 1), eccentricity(gp.graph, gp.index_of("1|" + ones)));
        if (n >= 5)
            b.eq(tag + " ecc 1|0..01", std::optional<int>(2 * n - 2),
                eccentricity(gp.graph, gp.index_of("1|" + std::string(n - 1, '0') + "1")));
        const auto dl = digons_and_loops(gp.graph);
        b.eq(tag + " digons/loops", "1/2", std::to_string(dl.digons) + "/" + std::to_string(dl.loops));
    }
    for (int n = 2; n <= 4; ++n) {
        const auto psi0 = families::gplus_edge_step(n);
        const auto psi1 = families::gplus_arc_step(n);
        bool ok0 = true, ok1 = true;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            const auto phi = families::gplus_digit_flip(n, mask);
            const auto phi_shift = families::gplus_digit_flip(n, families::gplus_shift_mask(n, mask));
            ok0 = ok0 && compose(psi0, phi) == compose(phi, psi0);
            ok1 = ok1 && compose(psi1, phi) == compose(phi_shift, psi1);
        }
        b.truth("G+(" + std::to_string(n) + ") Psi_0 commutes with every Phi", ok0);
        b.truth("G+(" + std::to_string(n) + ") Psi_1 Phi = Phi' Psi_1 for every mask", ok1);
    }
    return b.take();
}

SuiteReport suite_search_k3(int jobs)
{
    Builder b("search-k3");
    search::SearchOptions opts;
    opts.jobs = jobs;
    const auto almost = search::search_almost_moore(3, opts);
    const auto lc = bounds::level_counts(3);
    const BigInt expected_matchings
        = lc.b * bounds::perfect_matchings(static_cast<int>(lc.c) + 1) + lc.c * bounds::perfect_matchings(static_cast<int>(lc.c) - 1);
    b.eq("removal cases a(3)", lc.a, almost.removal_cases);
    b.eq("matching completions", expected_matchings, almost.matching_completions);
    b.eq("order", 10, almost.order);
    b.eq("survivors (regression value)", 3, almost.survivors.size());
    const auto generic = search::search_generic(10, 3, {}, opts);
    std::set<CanonicalForm> a, g;
    for (const auto& s : almost.survivors)
        a.insert(s.form);
    for (const auto& s : generic.survivors)
        g.insert(s.form);
    b.truth("generic order-10 search finds the same classes", a == g);
    const auto o6 = search::search_generic(6, 2, {}, opts);
    b.eq("order 6, k=2 survivors", 1, o6.survivors.size());
    b.truth("order 6 survivor ~ K(2,2)", !o6.survivors.empty()
            && are_isomorphic(o6.survivors.front().graph, digons_to_edges(families::kautz(2, 2).as_mixed())));
    return b.take();
}

SuiteReport suite_search_k4(int jobs)
{
    Builder b("search-k4");
    search::SearchOptions opts;
    opts.jobs = jobs;
    const auto o14 = search::search_order14_k4(opts);
    b.eq("order-14 survivors", 27, o14.survivors.size());
    std::set<CanonicalForm> found, table;
    for (const auto& s : o14.survivors)
        found.insert(s.form);
    for (const auto& g : table2_graphs())
        table.insert(canonical_form(g));
    b.truth("survivor set equals Table 2", found == table);
    int vertex_transitive = 0, cayley = 0, line = 0;
    const auto cay = cayley_d7();
    const auto lc7 = line_c7();
    for (const auto& s : o14.survivors) {
        vertex_transitive += automorphism_count(s.graph) >= 14;
        cayley += are_isomorphic(s.graph, cay);
        line += are_isomorphic(s.graph, lc7);
    }
    b.eq("survivors with >= 14 automorphisms", 1, vertex_transitive);
    b.eq("survivors ~ Cay(D7)", 1, cayley);
    b.eq("survivors ~ L(C7)", 1, line);
    const auto almost = search::search_almost_moore(4, opts);
    b.eq("almost Moore k=4 matching completions", 60, almost.matching_completions);
    b.truth("almost Moore k=4 examined <= N(4)", BigInt(almost.examined) <= bounds::search_space_bound(4));
    b.eq("almost Moore k=4 survivors", 0, almost.survivors.size());
    const auto o16 = search::search_order16_k4(opts);
    b.eq("order-16 removal cases", 73, o16.removal_cases);
    b.eq("order-16 survivors", 0, o16.survivors.size());
    return b.take();
}

SuiteReport suite_cayley(int jobs)
{
    Builder b("cayley");
    const auto cay = cayley_d7();
    b.eq("Cay(D7) order", 14, cay.order());
    b.eq("Cay(D7) diameter", std::optional<int>(4), diameter(cay));
    b.truth("Cay(D7) totally regular", is_totally_regular(cay, 1, 1));
    const auto d14 = algebra::dihedral(14);
    const int r = d14.element("Rot(1)"), s = d14.element("Ref(0)");
    b.truth("D14: r^7 = s^2 = (rs)^2 = 1", d14.power(r, 7) == d14.identity() && d14.power(s, 2) == d14.identity()
            && d14.power(d14.mul(r, s), 2) == d14.identity());
    const auto d14_hits = algebra::cayley_search(d14, 4, jobs);
    b.truth("D14 has a Cayley graph of diameter 4",
        std::any_of(d14_hits.begin(), d14_hits.end(), [](const auto& h) { return h.diameter == 4; }));
    const auto z = algebra::semidirect_cyclic(9, 6, 2);
    b.eq("Z9:Z6 order", 54, z.order());
    const auto hits = algebra::cayley_search(z, 7, jobs);
    b.truth("Z9:Z6 has a Cayley graph of diameter 7",
        std::any_of(hits.begin(), hits.end(), [](const auto& h) { return h.diameter == 7; }));
    b.eq("Z17:Z8 order", 136, algebra::semidirect_cyclic(17, 8, 2).order());
    b.eq("A5 x Z2 order", 120, algebra::direct_product(algebra::alternating5(), algebra::cyclic(2)).order());
    b.eq("AGL(1,8) order", 56, algebra::agl1_8().order());
    b.eq("PGL(2,7) order", 336, algebra::pgl2(7).order());
    b.eq("PSL(2,7) order", 168, algebra::psl2(7).order());
    return b.take();
}

SuiteReport suite_lift(int jobs)
{
    Builder b("lift");
    const auto d18 = algebra::dihedral(18);
    const auto vb = algebra::parse_voltage_base(reference::fig7_base, d18);
    const auto g = algebra::lift(vb, d18);
    b.eq("Fig. 7 lift order", 72, g.order());
    b.truth("Fig. 7 lift totally (1,1)-regular", is_totally_regular(g, 1, 1));
    b.eq("Fig. 7 lift diameter", std::optional<int>(8), diameter(g, jobs));
    algebra::VoltageSearchOptions opts;
    opts.target_k = 8;
    opts.budget = 1'000'000;
    opts.jobs = jobs;
    const auto res = algebra::voltage_search(vb, d18, opts);
    b.truth("Fig. 7 shape search is exhaustive", res.exhaustive);
    b.truth("Fig. 7 shape search finds a diameter-8 lift",
        !res.best.empty() && res.best.front().diameter && *res.best.front().diameter <= 8);
    // A single vertex with loops is a Cayley graph.
    algebra::VoltageBaseGraph one;
    one.order = 1;
    one.carriers = {{algebra::CarrierKind::UndirectedLoop, 0, 0, d18.element("Ref(0)")},
        {algebra::CarrierKind::DirectedLoop, 0, 0, d18.element("Rot(1)")}};
    b.truth("one-vertex lift equals the Cayley graph",
        algebra::lift(one, d18) == algebra::cayley_mixed(d18, {d18.element("Ref(0)")}, {d18.element("Rot(1)")}));
    return b.take();
}

SuiteReport suite_properties(int jobs)
{
    Builder b("properties");
    std::vector<MixedGraph> sample{codec::decode_digraph6(reference::order14_diameter4[5]),
        families::build_Fstar(3).graph, families::build_Gplus(3).graph, families::build_G(4).graph,
        families::build_H(4, families::symmetric_cycle(3)).graph};
    bool bfs_ok = true;
    for (const auto& g : sample) {
        const int k = *diameter(g);
        const auto mats = distance_matrices(g, k);
        for (int u = 0; u < g.order(); ++u) {
            const auto t = bfs(g, u);
            for (int v = 0; v < g.order(); ++v)
                bfs_ok = bfs_ok && mats[t.dist[v]][u][v] == 1;
        }
    }
    b.truth("BFS distances match distance matrices", bfs_ok);
    std::mt19937_64 rng(20240229);
    int stable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& g = sample[trial % sample.size()];
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        stable += canonical_form(g.relabeled(perm)) == canonical_form(g);
    }
    b.eq("canonical form stable under random relabelling", 1000, stable);
    search::SearchOptions one, many;
    many.jobs = std::max(2, jobs);
    many.shard_depth = 3;
    const auto a = search::search_generic(10, 3, {}, one);
    const auto c = search::search_generic(10, 3, {}, many);
    bool same = a.survivors.size() == c.survivors.size() && a.examined == c.examined;
    for (std::size_t i = 0; same && i < a.survivors.size(); ++i)
        same = a.survivors[i].form == c.survivors[i].form && a.survivors[i].graph == c.survivors[i].graph;
    b.truth("search result independent of jobs and shard depth", same);
    return b.take();
}

} // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"table1", "table2", "table3", "table4", "families", "gplus",
        "search-k3", "search-k4", "cayley", "lift", "properties"};
    return names;
}

SuiteReport run_suite(std::string_view name, int jobs)
{
    if (name == "table1")
        return suite_table1();
    if (name == "table2")
        return suite_table2();
    if (name == "table3")
        return suite_table3();
    if (name == "table4")
        return suite_table4();
    if (name == "families")
        return suite_families();
    if (name == "gplus")
        return suite_gplus();
    if (name == "search-k3")
        return suite_search_k3(jobs);
    if (name == "search-k4")
        return suite_search_k4(jobs);
    if (name == "cayley")
        return suite_cayley(jobs);
    if (name == "lift")
        return suite_lift(jobs);
    if (name == "properties")
        return suite_properties(jobs);
    throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

std::string format_report(const SuiteReport& report)
{
    std::ostringstream out;
    int passed = 0;
    for (const auto& c : report.checks) {
        passed += c.pass;
        out << (c.pass ? "PASS " : "FAIL ") << report.name << ": " << c.description;
        if (c.pass)
            out << " = " << c.observed << '\n';
        else
            out << ": expected " << c.expected << ", observed " << c.observed << '\n';
    }
    out << report.name << ": " << passed << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

} // namespace mixedmoore::verify
