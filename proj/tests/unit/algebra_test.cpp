#include "mixedmoore/algebra.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/reference.hpp"

#include <doctest.h>

#include <functional>

using namespace mixedmoore;
using namespace mixedmoore::algebra;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

void check_axioms(const FiniteGroup& g)
{
    const int n = g.order();
    const int e = g.identity();
    for (int a = 0; a < n; ++a) {
        REQUIRE(g.mul(a, e) == a);
        REQUIRE(g.mul(e, a) == a);
        REQUIRE(g.mul(a, g.inv(a)) == e);
        REQUIRE(g.element(g.element_name(a)) == a);
    }
    // Sampled associativity.
    for (long long i = 0; i < 2000; ++i) {
        const int a = static_cast<int>(i * 7919 % n), b = static_cast<int>((i * 104729 + 3) % n),
                  c = static_cast<int>((i * 1299709 + 11) % n);
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

} // namespace

TEST_CASE("group axioms for every constructor")
{
    for (const char* spec : {"cyclic:12", "dihedral:14", "dihedral:18", "dihedral:16", "semidirect:9:6:2",
             "product:a5,cyclic:2", "agl1_8", "pgl2:7", "psl2:11", "product:(dihedral:6),(cyclic:4)"})
        check_axioms(parse_group(spec));
}

TEST_CASE("group orders")
{
    CHECK(parse_group("a5").order() == 60);
    CHECK(parse_group("agl1_8").order() == 56);
    CHECK(parse_group("pgl2:7").order() == 336);
    CHECK(parse_group("psl2:7").order() == 168);
    CHECK(parse_group("semidirect:17:8:2").order() == 136);
    CHECK(parse_group("dihedral:18").involutions().size() == 9);
    CHECK(parse_group("dihedral:16").involutions().size() == 9);
}

TEST_CASE("group errors")
{
    CHECK(kind_of([] { parse_group("cyclic"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_group("bogus:3"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { semidirect_cyclic(9, 6, 3); }) == ErrorKind::InvalidAction);
    CHECK(kind_of([] { pgl2(4); }) == ErrorKind::UnsupportedField);
    CHECK(kind_of([] { pgl2(31); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { cyclic(5).element("9"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("dihedral relations")
{
    const auto d = dihedral(14);
    const int r = d.element("Rot(1)"), s = d.element("Ref(0)");
    CHECK(d.element_order(r) == 7);
    CHECK(d.is_involution(s));
    CHECK(d.mul(d.mul(s, r), s) == d.inv(r));
}

TEST_CASE("Cayley graph of Z6 with an involution and a generator")
{
    const auto z = cyclic(6);
    const auto g = cayley_mixed(z, {z.element("3")}, {z.element("1")});
    CHECK(g.order() == 6);
    CHECK(g.edges().size() == 3);
    CHECK(g.arcs().size() == 6);
    CHECK(is_totally_regular(g, 1, 1));
    CHECK(diameter(g) == std::optional<int>(3));
}

TEST_CASE("Cayley graph errors")
{
    const auto z = cyclic(6);
    CHECK(kind_of([&] { cayley_mixed(z, {1}, {}); }) == ErrorKind::S1NotSymmetric);
    CHECK(kind_of([&] { cayley_mixed(z, {3}, {1, 5}); }) == ErrorKind::S2MeetsInverse);
    CHECK(kind_of([&] { cayley_mixed(z, {0}, {}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { cayley_mixed(z, {3}, {9}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { cayley_search(cyclic(5), 4); }) == ErrorKind::NoInvolution);
}

TEST_CASE("Cayley graph of D7 has diameter 4")
{
    const auto d = dihedral(14);
    const auto g = cayley_mixed(d, {d.element("Ref(0)")}, {d.element("Rot(1)")});
    CHECK(diameter(g) == std::optional<int>(4));
    const auto hits = cayley_search(d, 4);
    REQUIRE_FALSE(hits.empty());
    CHECK(hits.front().diameter == 4);
}

TEST_CASE("property: identity voltages lift to |G| copies of the base")
{
    const auto g = dihedral(10);
    const auto vb = parse_voltage_base("base 3\ne 0 1\na 1 2\na 2 0\n", g);
    const auto l = lift(vb, g);
    CHECK(l.order() == 30);
    CHECK(connected_components(l) == 10);
}

TEST_CASE("lift of a single vertex equals the Cayley graph")
{
    const auto g = semidirect_cyclic(9, 6, 2);
    const auto inv = g.involutions().front();
    const int gen = g.element("(1,1)");
    VoltageBaseGraph one;
    one.order = 1;
    one.carriers = {{CarrierKind::UndirectedLoop, 0, 0, inv}, {CarrierKind::DirectedLoop, 0, 0, gen}};
    CHECK(lift(one, g) == cayley_mixed(g, {inv}, {gen}));
}

TEST_CASE("voltage base parsing")
{
    const auto g = dihedral(18);
    const auto vb = parse_voltage_base(reference::fig7_base, g);
    CHECK(vb.order == 4);
    CHECK(vb.carriers.size() == 7);
    CHECK(parse_voltage_base(format_voltage_base(vb, g), g).carriers.size() == 7);
    CHECK(kind_of([&] { lift(parse_voltage_base("base 1\nuloop 0 Rot(1)\n", g), g); })
        == ErrorKind::NonInvolutoryLoopVoltage);
    CHECK(kind_of([&] { parse_voltage_base("base 2\nx 0 1\n", g); }) == ErrorKind::ParseError);
    const auto lifted = lift(vb, g);
    CHECK(lifted.order() == 72);
    CHECK(diameter(lifted) == std::optional<int>(8));
}

TEST_CASE("voltage search is exhaustive within budget and needs a seed otherwise")
{
    const auto g = dihedral(14);
    const auto shape = parse_voltage_base("base 1\nuloop 0\ndloop 0\n", g);
    VoltageSearchOptions opts;
    opts.target_k = 4;
    const auto res = voltage_search(shape, g, opts);
    CHECK(res.exhaustive);
    CHECK(res.space_size == 7 * 14);
    REQUIRE_FALSE(res.best.empty());
    CHECK(res.best.front().diameter == std::optional<int>(4));
    CHECK(res.hits > 0);
    opts.budget = 10;
    CHECK(kind_of([&] { voltage_search(shape, g, opts); }) == ErrorKind::InvalidArgument);
    opts.seed = 42;
    const auto a = voltage_search(shape, g, opts);
    const auto b = voltage_search(shape, g, opts);
    CHECK(a.examined == 10);
    CHECK(a.best.size() == b.best.size());
    for (std::size_t i = 0; i < a.best.size(); ++i)
        CHECK(a.best[i].voltages == b.best[i].voltages);
}
