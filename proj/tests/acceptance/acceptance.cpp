// One line per acceptance criterion: "AC<n> PASS|FAIL <seconds>s <detail>".
// Exit status 1 when any criterion fails.

#include "mixedmoore/algebra.hpp"
#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/core.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/spectra.hpp"
#include "mixedmoore/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

using namespace mixedmoore;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_seconds) {
        std::ostringstream s;
        s << "over time limit " << limit_seconds << "s";
        o.expect(false, s.str());
    }
    failures += !o.pass;
    std::printf("AC%d %s %.2fs%s%s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
}

std::vector<MixedGraph> table2()
{
    std::vector<MixedGraph> out;
    for (auto s : reference::order14_diameter4)
        out.push_back(codec::decode_digraph6(s));
    return out;
}

MixedGraph cay_d7()
{
    const auto d = algebra::dihedral(14);
    return algebra::cayley_mixed(d, {d.element("Ref(0)")}, {d.element("Rot(1)")});
}

void fold(Outcome& o, const verify::SuiteReport& r, const std::function<bool(const std::string&)>& keep)
{
    for (const auto& c : r.checks)
        if (keep(c.description))
            o.expect(c.pass, c.description + ": expected " + c.expected + ", observed " + c.observed);
}

bool contains(const std::string& s, const char* part)
{
    return s.find(part) != std::string::npos;
}

} // namespace

int main()
{
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    criterion(1, 1.0, [] {
        Outcome o;
        const long long want[] = {6, 11, 19, 32, 53, 87, 142, 231, 375, 608, 985, 1595, 2582, 4179, 6763};
        for (int k = 2; k <= 16; ++k)
            o.expect(bounds::moore_11(k) == want[k - 2], "M(" + std::to_string(k) + ")=" + bounds::moore_11(k).str());
        return o;
    });

    criterion(2, 1.0, [] {
        Outcome o;
        const long long want[] = {48, 78, 126, 206, 336, 544, 882, 1428, 2312, 3744, 6058};
        for (int k = 6; k <= 16; ++k)
            o.expect(bounds::upper_bound(k) == want[k - 6], "upper(" + std::to_string(k) + ")=" + bounds::upper_bound(k).str());
        return o;
    });

    criterion(3, 1.0, [] {
        Outcome o;
        o.expect(bounds::search_space_bound(3) == 396, "N(3)=" + bounds::search_space_bound(3).str());
        o.expect(bounds::search_space_bound(4) == 889980, "N(4)=" + bounds::search_space_bound(4).str());
        o.expect(bounds::search_space_bound(5) == 0, "N(5)=" + bounds::search_space_bound(5).str());
        return o;
    });

    criterion(4, 5.0, [] {
        Outcome o;
        const auto gs = table2();
        o.expect(gs.size() == 27, "count");
        std::set<CanonicalForm> forms;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const auto& g = gs[i];
            const std::string tag = "#" + std::to_string(i + 1);
            o.expect(g.order() == 14, tag + " order");
            o.expect(diameter(g) == std::optional<int>(4), tag + " diameter");
            o.expect(is_totally_regular(g, 1, 1), tag + " regularity");
            o.expect(digons_and_loops(g).digons == 0, tag + " digons");
            o.expect(codec::encode_digraph6(g, false) == reference::order14_diameter4[i], tag + " round trip");
            forms.insert(canonical_form(g));
        }
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                o.expect(!are_isomorphic(gs[i], gs[j]), "#" + std::to_string(i + 1) + " ~ #" + std::to_string(j + 1));
        o.expect(forms.size() == 27, "canonical forms");
        return o;
    });

    criterion(5, 30.0, [] {
        Outcome o;
        std::vector<int> sizes(6, 0);
        for (const auto& g : table2()) {
            const auto c = spectra::classify(spectra::char_poly(g));
            o.expect(c.has_value(), "unclassified graph");
            if (c)
                ++sizes[*c - 1];
        }
        o.expect(sizes == std::vector<int>{9, 6, 5, 4, 2, 1}, "class sizes");
        return o;
    });

    criterion(6, 15 * 60.0, [jobs] {
        Outcome o;
        search::SearchOptions opts;
        opts.jobs = jobs;
        const auto res = search::search_order14_k4(opts);
        o.expect(!res.budget_exhausted, "budget exhausted");
        o.expect(res.survivors.size() == 27, "survivors=" + std::to_string(res.survivors.size()));
        std::set<CanonicalForm> found, want;
        for (const auto& s : res.survivors)
            found.insert(s.form);
        for (const auto& g : table2())
            want.insert(canonical_form(g));
        o.expect(found == want, "survivor set differs from the listed 27");
        const auto cay = cay_d7();
        const auto line = digons_to_edges(families::line_digraph(families::symmetric_cycle(7)).as_mixed());
        int n_cay = 0, n_line = 0, both = 0;
        for (const auto& s : res.survivors) {
            const bool a = are_isomorphic(s.graph, cay), b = are_isomorphic(s.graph, line);
            n_cay += a;
            n_line += b;
            both += a && b;
        }
        o.expect(n_cay == 1 && n_line == 1 && both == 1, "Cayley/line survivor count");
        return o;
    });

    criterion(7, 10 * 60.0, [jobs] {
        Outcome o;
        search::SearchOptions opts;
        opts.jobs = jobs;
        const auto a = search::search_almost_moore(4, opts);
        const auto b = search::search_order16_k4(opts);
        o.expect(!a.budget_exhausted && !b.budget_exhausted, "budget exhausted");
        o.expect(a.survivors.empty(), "almost Moore k=4 survivors=" + std::to_string(a.survivors.size()));
        o.expect(b.survivors.empty(), "order 16 survivors=" + std::to_string(b.survivors.size()));
        return o;
    });

    criterion(8, 5 * 60.0, [] {
        Outcome o;
        fold(o, verify::run_suite("families"), [](const std::string&) { return true; });
        fold(o, verify::run_suite("gplus"), [](const std::string& d) {
            return contains(d, "diameter") || contains(d, "ecc");
        });
        return o;
    });

    criterion(9, 1.0, [] {
        Outcome o;
        const auto gp = families::build_Gplus(2);
        std::vector<int> idx;
        for (auto label : reference::gplus2_order)
            idx.push_back(gp.index_of(label));
        const auto a = adjacency_matrix(gp.graph);
        long long m[8][8], p[8][8];
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                p[i][j] = m[i][j] = a[idx[i]][idx[j]];
        for (int step = 1; step < 4; ++step) {
            long long q[8][8] = {};
            for (int i = 0; i < 8; ++i)
                for (int t = 0; t < 8; ++t)
                    for (int j = 0; j < 8; ++j)
                        q[i][j] += p[i][t] * m[t][j];
            std::copy(&q[0][0], &q[0][0] + 64, &p[0][0]);
        }
        bool same = true, same4 = true;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                same = same && m[i][j] == reference::gplus2_adjacency[i][j];
                same4 = same4 && p[i][j] == reference::gplus2_fourth_power[i][j];
            }
        o.expect(same, "A differs");
        o.expect(same4, "A^4 differs");
        return o;
    });

    criterion(10, 2 * 60.0, [jobs] {
        Outcome o;
        const auto cay = cay_d7();
        o.expect(cay.order() == 14, "Cay(D7) order");
        o.expect(diameter(cay) == std::optional<int>(4), "Cay(D7) diameter");
        const auto d18 = algebra::dihedral(18);
        const auto lift = algebra::lift(algebra::parse_voltage_base(reference::fig7_base, d18), d18);
        o.expect(lift.order() == 72, "lift order=" + std::to_string(lift.order()));
        o.expect(is_totally_regular(lift, 1, 1), "lift is not totally (1,1)-regular");
        const auto d = diameter(lift, jobs);
        o.expect(d == std::optional<int>(8), "lift diameter=" + (d ? std::to_string(*d) : std::string("inf")));
        const auto z = algebra::semidirect_cyclic(9, 6, 2);
        const auto hits = algebra::cayley_search(z, 7, jobs);
        o.expect(z.order() == 54, "Z9:Z6 order");
        o.expect(std::any_of(hits.begin(), hits.end(), [](const auto& h) { return h.diameter == 7; }),
            "no diameter-7 Cayley graph of order 54");
        return o;
    });

    criterion(11, 5 * 60.0, [jobs] {
        Outcome o;
        fold(o, verify::run_suite("properties", jobs), [](const std::string&) { return true; });
        fold(o, verify::run_suite("gplus"), [](const std::string& d) {
            return contains(d, "Psi") || contains(d, "A^");
        });
        return o;
    });

    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
