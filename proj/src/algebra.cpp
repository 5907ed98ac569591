#include "mixedmoore/algebra.hpp"

#include "mixedmoore/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <atomic>
#include <climits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace mixedmoore::algebra {

namespace {

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

void check_order(long long n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "group order must be positive");
    if (n > max_group_order)
        throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds " + std::to_string(max_group_order));
}

int mod(long long a, long long m)
{
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

using Perm = std::vector<int>;

// Products compose as maps: (a*b)(i) = a(b(i)).
FiniteGroup permutation_group(std::string name, const std::vector<Perm>& perms, std::vector<std::string> names)
{
    const int n = static_cast<int>(perms.size());
    check_order(n);
    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(perms[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "repeated permutation in " + name);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    Perm c(perms[0].size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = perms[a][perms[b][i]];
            auto it = index.find(c);
            if (it == index.end())
                throw Error(ErrorKind::InvalidArgument, name + " is not closed under composition");
            table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(it->second);
        }
    return FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(names));
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

struct Mat2 {
    int a, b, c, d;
};

Mat2 normalize(Mat2 m, int q)
{
    const int lead = m.a != 0 ? m.a : m.b;
    int inv = 1;
    for (int t = 1; t < q; ++t)
        if (lead * t % q == 1) {
            inv = t;
            break;
        }
    return {m.a * inv % q, m.b * inv % q, m.c * inv % q, m.d * inv % q};
}

FiniteGroup projective_group(int q, bool special)
{
    if (!is_prime(q))
        throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " is not prime");
    const long long pgl_order = static_cast<long long>(q) * (q * q - 1);
    check_order(special ? pgl_order / (q == 2 ? 1 : 2) : pgl_order);
    std::vector<bool> square(q, false);
    for (int t = 1; t < q; ++t)
        square[t * t % q] = true;
    auto code = [q](const Mat2& m) { return ((m.a * q + m.b) * q + m.c) * q + m.d; };
    std::vector<Mat2> elems;
    std::vector<int> index(static_cast<std::size_t>(q) * q * q * q, -1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (!(a == 1 || (a == 0 && b == 1)))
                continue;
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    const int det = mod(a * d - b * c, q);
                    if (det == 0 || (special && !square[det]))
                        continue;
                    index[code({a, b, c, d})] = static_cast<int>(elems.size());
                    elems.push_back({a, b, c, d});
                }
        }
    const int n = static_cast<int>(elems.size());
    std::vector<std::string> names;
    for (const auto& m : elems)
        names.push_back("[" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) + ","
            + std::to_string(m.d) + "]");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat2& x = elems[i];
            const Mat2& y = elems[j];
            Mat2 p{(x.a * y.a + x.b * y.c) % q, (x.a * y.b + x.b * y.d) % q, (x.c * y.a + x.d * y.c) % q,
                (x.c * y.b + x.d * y.d) % q};
            table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(index[code(normalize(p, q))]);
        }
    return FiniteGroup::from_table((special ? "PSL(2," : "PGL(2,") + std::to_string(q) + ")", n, std::move(table),
        std::move(names));
}

int gf8_mul(int a, int b)
{
    int r = 0;
    for (int i = 0; i < 3; ++i)
        if (b >> i & 1)
            r ^= a << i;
    for (int i = 4; i >= 3; --i)
        if (r >> i & 1)
            r ^= 0b1011 << (i - 3);
    return r;
}

int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

// Position of the first comma outside brackets, or npos.
std::size_t top_level_comma(std::string_view s)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[' || c == '<')
            ++depth;
        else if (c == ')' || c == ']' || c == '>')
            --depth;
        else if (c == ',' && depth == 0)
            return i;
    }
    return std::string_view::npos;
}

std::string_view unwrap(std::string_view s)
{
    while (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '<' && s.back() == '>'))) {
        int depth = 0;
        bool encloses = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(' || s[i] == '<')
                ++depth;
            else if (s[i] == ')' || s[i] == '>')
                --depth;
            if (depth == 0) {
                encloses = false;
                break;
            }
        }
        if (!encloses)
            break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::string cycle_notation(const Perm& p)
{
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i))
            continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first)
                out += ',';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// Fiber moves of a voltage graph: from base vertex u to (to, g * voltage).
struct Move {
    int to;
    int voltage;
};

std::vector<std::vector<Move>> fiber_moves(const VoltageBaseGraph& vb, const FiniteGroup& g, const std::vector<int>& volt)
{
    std::vector<std::vector<Move>> moves(vb.order);
    for (std::size_t i = 0; i < vb.carriers.size(); ++i) {
        const Carrier& c = vb.carriers[i];
        const int a = volt[i];
        switch (c.kind) {
        case CarrierKind::Edge:
            moves[c.u].push_back({c.v, a});
            if (c.u != c.v)
                moves[c.v].push_back({c.u, g.inv(a)});
            break;
        case CarrierKind::UndirectedLoop:
        case CarrierKind::Arc:
        case CarrierKind::DirectedLoop:
            moves[c.u].push_back({c.v, a});
            break;
        }
    }
    return moves;
}

// Left multiplication by G acts on the lift, so the eccentricities of the
// vertices (u, 1) determine the diameter.
std::optional<int> lift_diameter(int base_order, const FiniteGroup& g, const std::vector<std::vector<Move>>& moves,
    std::vector<int>& dist, std::vector<int>& queue)
{
    const int n = g.order();
    const int total = base_order * n;
    int diam = 0;
    for (int s = 0; s < base_order; ++s) {
        dist.assign(total, -1);
        queue.clear();
        const int src = s * n + g.identity();
        dist[src] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            const int u = x / n;
            const int h = x % n;
            for (const Move& m : moves[u]) {
                const int y = m.to * n + g.mul(h, m.voltage);
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (static_cast<int>(queue.size()) != total)
            return std::nullopt;
        diam = std::max(diam, dist[queue.back()]);
    }
    return diam;
}

bool base_is_regular(const VoltageBaseGraph& vb)
{
    std::vector<int> und(vb.order, 0), out(vb.order, 0), in(vb.order, 0);
    for (const auto& c : vb.carriers) {
        switch (c.kind) {
        case CarrierKind::Edge:
            ++und[c.u];
            ++und[c.v];
            break;
        case CarrierKind::UndirectedLoop:
            ++und[c.u];
            break;
        case CarrierKind::Arc:
        case CarrierKind::DirectedLoop:
            ++out[c.u];
            ++in[c.v];
            break;
        }
    }
    for (int u = 0; u < vb.order; ++u)
        if (und[u] != 1 || out[u] != 1 || in[u] != 1)
            return false;
    return true;
}

struct Ranked {
    int diameter; // INT_MAX when infinite
    std::uint64_t index;
    std::vector<int> voltages;
    bool operator<(const Ranked& o) const
    {
        return std::tie(diameter, index) < std::tie(o.diameter, o.index);
    }
};

} // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<std::uint16_t> table,
    std::vector<std::string> element_names)
{
    check_order(order);
    const int n = order;
    if (table.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorKind::InvalidArgument, "table size does not match the order");
    if (static_cast<int>(element_names.size()) != n)
        throw Error(ErrorKind::InvalidArgument, "need one name per element");
    for (auto v : table)
        if (v >= n)
            throw Error(ErrorKind::InvalidArgument, "table entry out of range");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = n;
    g.table_ = std::move(table);
    g.names_ = std::move(element_names);

    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = g.mul(a, x) == x && g.mul(x, a) == x;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw Error(ErrorKind::InvalidArgument, g.name_ + ": no identity");
    g.identity_ = e;
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int x = 0; x < n; ++x) {
            row[g.mul(a, x)] = true;
            col[g.mul(x, a)] = true;
            if (g.mul(a, x) == e)
                g.inv_[a] = x;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
            throw Error(ErrorKind::InvalidArgument, g.name_ + ": table is not a Latin square");
    }
    auto assoc = [&](int a, int b, int c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
    if (n <= 200) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c))
                        throw Error(ErrorKind::InvalidArgument, g.name_ + ": not associative");
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw Error(ErrorKind::InvalidArgument, g.name_ + ": not associative");
    }
    std::set<std::string> seen;
    for (const auto& s : g.names_)
        if (!seen.insert(s).second)
            throw Error(ErrorKind::DuplicateElement, g.name_ + ": element name " + s);
    return g;
}

int FiniteGroup::power(int a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int result = identity_;
    int base = a;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

std::vector<int> FiniteGroup::involutions() const
{
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (is_involution(a))
            out.push_back(a);
    return out;
}

int FiniteGroup::element(std::string_view literal) const
{
    const std::string key = strip_spaces(literal);
    for (int a = 0; a < n_; ++a)
        if (names_[a] == key)
            return a;
    throw Error(ErrorKind::InvalidArgument, "no element '" + key + "' in " + name_);
}

FiniteGroup cyclic(int n)
{
    check_order(n);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
    }
    return FiniteGroup::from_table("Z" + std::to_string(n), n, std::move(table), std::move(names));
}

FiniteGroup dihedral(int order)
{
    if (order % 2 != 0 || order < 6)
        throw Error(ErrorKind::InvalidArgument, "dihedral order must be even and at least 6");
    check_order(order);
    const int m = order / 2;
    std::vector<Perm> perms;
    std::vector<std::string> names;
    auto add = [&](const std::string& name, auto f) {
        Perm p(m);
        for (int i = 0; i < m; ++i)
            p[i] = mod(f(i), m);
        perms.push_back(std::move(p));
        names.push_back(name);
    };
    for (int k = 0; k < m; ++k)
        add("Rot(" + std::to_string(k) + ")", [k](int i) { return i - k; });
    if (m % 2 == 1) {
        for (int k = 0; k < m; ++k)
            add("Ref(" + std::to_string(k) + ")", [k](int i) { return 2 * k - i; });
    } else {
        for (int k = 0; k < m / 2; ++k)
            add("Ref(" + std::to_string(k) + ")", [k](int i) { return 2 * k - i; });
        for (int k = 0; k < m / 2; ++k)
            add("RefE(" + std::to_string(k) + ")", [k](int i) { return 2 * k + 1 - i; });
    }
    return permutation_group("D" + std::to_string(order), perms, std::move(names));
}

FiniteGroup semidirect_cyclic(int m, int k, int t)
{
    if (m < 1 || k < 1)
        throw Error(ErrorKind::InvalidArgument, "semidirect factors must be positive");
    check_order(static_cast<long long>(m) * k);
    const int tm = mod(t, m);
    if (std::gcd(tm, m) != 1 && m > 1)
        throw Error(ErrorKind::InvalidAction, std::to_string(t) + " is not a unit mod " + std::to_string(m));
    std::vector<int> tp(k + 1, 1 % m);
    for (int y = 1; y <= k; ++y)
        tp[y] = static_cast<int>(static_cast<long long>(tp[y - 1]) * tm % m);
    if (tp[k] != 1 % m)
        throw Error(ErrorKind::InvalidAction,
            std::to_string(t) + "^" + std::to_string(k) + " is not 1 mod " + std::to_string(m));
    const int n = m * k;
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < k; ++y)
            names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int x1 = a / k, y1 = a % k, x2 = b / k, y2 = b % k;
            const int x = static_cast<int>((x1 + static_cast<long long>(tp[y1]) * x2) % m);
            const int y = (y1 + y2) % k;
            table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(x * k + y);
        }
    return FiniteGroup::from_table("Z" + std::to_string(m) + ":Z" + std::to_string(k), n, std::move(table),
        std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    check_order(static_cast<long long>(g.order()) * h.order());
    const int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            names.push_back("(" + g.element_name(a) + "," + h.element_name(b) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x) * n + y]
                = static_cast<std::uint16_t>(g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh));
    return FiniteGroup::from_table(g.name() + "x" + h.name(), n, std::move(table), std::move(names));
}

FiniteGroup alternating5()
{
    Perm p{0, 1, 2, 3, 4};
    std::vector<Perm> perms;
    std::vector<std::string> names;
    do {
        int inversions = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                inversions += p[i] > p[j];
        if (inversions % 2 == 0) {
            perms.push_back(p);
            names.push_back(cycle_notation(p));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return permutation_group("A5", perms, std::move(names));
}

FiniteGroup agl1_8()
{
    const int n = 56;
    std::vector<std::string> names;
    for (int a = 1; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            names.push_back("[" + std::to_string(a) + "," + std::to_string(b) + "]");
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            const int af = f / 8 + 1, bf = f % 8, ag = g / 8 + 1, bg = g % 8;
            // f(g(x)) = af (ag x + bg) + bf
            const int a = gf8_mul(af, ag);
            const int b = gf8_mul(af, bg) ^ bf;
            table[static_cast<std::size_t>(f) * n + g] = static_cast<std::uint16_t>((a - 1) * 8 + b);
        }
    return FiniteGroup::from_table("AGL(1,8)", n, std::move(table), std::move(names));
}

FiniteGroup pgl2(int q)
{
    return projective_group(q, false);
}

FiniteGroup psl2(int q)
{
    return projective_group(q, true);
}

FiniteGroup parse_group(std::string_view spec)
{
    const std::string cleaned = strip_spaces(spec);
    const std::string_view s = unwrap(cleaned);
    const auto colon = s.find(':');
    const std::string_view head = s.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
    auto args = [&](std::size_t count) {
        auto parts = colon == std::string_view::npos ? std::vector<std::string_view>{} : split(rest, ':');
        if (parts.size() != count)
            throw Error(ErrorKind::ParseError, "'" + std::string(head) + "' takes " + std::to_string(count) + " argument(s)");
        std::vector<int> out;
        for (auto p : parts)
            out.push_back(parse_int(p));
        return out;
    };
    if (head == "cyclic")
        return cyclic(args(1)[0]);
    if (head == "dihedral")
        return dihedral(args(1)[0]);
    if (head == "semidirect") {
        const auto a = args(3);
        return semidirect_cyclic(a[0], a[1], a[2]);
    }
    if (head == "product") {
        const auto comma = top_level_comma(rest);
        if (colon == std::string_view::npos || comma == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "product needs two comma-separated groups");
        return direct_product(parse_group(rest.substr(0, comma)), parse_group(rest.substr(comma + 1)));
    }
    if (head == "a5" && colon == std::string_view::npos)
        return alternating5();
    if (head == "agl1_8" && colon == std::string_view::npos)
        return agl1_8();
    if (head == "pgl2")
        return pgl2(args(1)[0]);
    if (head == "psl2")
        return psl2(args(1)[0]);
    throw Error(ErrorKind::ParseError, "unknown group '" + std::string(s) + "'");
}

MixedGraph cayley_mixed(const FiniteGroup& g, const std::vector<int>& s1, const std::vector<int>& s2)
{
    const int n = g.order();
    for (int x : s1)
        if (x < 0 || x >= n)
            throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
    for (int x : s2)
        if (x < 0 || x >= n)
            throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
    const std::set<int> set1(s1.begin(), s1.end()), set2(s2.begin(), s2.end());
    if (set1.size() != s1.size() || set2.size() != s2.size())
        throw Error(ErrorKind::DuplicateElement, "repeated generator");
    if (set1.count(g.identity()) || set2.count(g.identity()))
        throw Error(ErrorKind::InvalidArgument, "the identity cannot be a generator");
    for (int x : s1)
        if (!set1.count(g.inv(x)))
            throw Error(ErrorKind::S1NotSymmetric, g.element_name(x) + " is in S1 but its inverse is not");
    for (int x : s2)
        if (set2.count(g.inv(x)))
            throw Error(ErrorKind::S2MeetsInverse, g.element_name(x) + " and its inverse are both in S2");
    std::set<Edge> edges;
    std::vector<Arc> arcs;
    for (int w = 0; w < n; ++w) {
        for (int x : s1)
            edges.insert(Edge(w, g.mul(w, x)));
        for (int x : s2)
            arcs.push_back({w, g.mul(w, x)});
    }
    return MixedGraph::build(n, {edges.begin(), edges.end()}, std::move(arcs));
}

VoltageBaseGraph parse_voltage_base(std::string_view text, const FiniteGroup& g)
{
    VoltageBaseGraph vb;
    bool have_header = false;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "base") {
            if (have_header)
                fail("repeated header");
            if (!(ls >> vb.order) || vb.order < 1)
                fail("bad vertex count");
            have_header = true;
            continue;
        }
        if (!have_header)
            fail("expected 'base <n>' first");
        Carrier c;
        if (kw == "e" || kw == "a") {
            c.kind = kw == "e" ? CarrierKind::Edge : CarrierKind::Arc;
            if (!(ls >> c.u >> c.v))
                fail("expected two vertices");
        } else if (kw == "uloop" || kw == "dloop") {
            c.kind = kw == "uloop" ? CarrierKind::UndirectedLoop : CarrierKind::DirectedLoop;
            if (!(ls >> c.u))
                fail("expected a vertex");
            c.v = c.u;
        } else {
            fail("unknown keyword '" + kw + "'");
        }
        if (c.u < 0 || c.u >= vb.order || c.v < 0 || c.v >= vb.order)
            throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": vertex out of range");
        if (c.kind == CarrierKind::Edge && c.u == c.v)
            c.kind = CarrierKind::UndirectedLoop;
        if (c.kind == CarrierKind::Arc && c.u == c.v)
            c.kind = CarrierKind::DirectedLoop;
        std::string rest;
        std::getline(ls, rest);
        const std::string lit = strip_spaces(rest);
        c.voltage = lit.empty() ? g.identity() : g.element(lit);
        vb.carriers.push_back(c);
    }
    if (!have_header)
        throw Error(ErrorKind::ParseError, "missing 'base <n>' header");
    return vb;
}

std::string format_voltage_base(const VoltageBaseGraph& vb, const FiniteGroup& g)
{
    std::ostringstream out;
    out << "base " << vb.order << '\n';
    for (const auto& c : vb.carriers) {
        switch (c.kind) {
        case CarrierKind::Edge:
            out << "e " << c.u << ' ' << c.v;
            break;
        case CarrierKind::Arc:
            out << "a " << c.u << ' ' << c.v;
            break;
        case CarrierKind::UndirectedLoop:
            out << "uloop " << c.u;
            break;
        case CarrierKind::DirectedLoop:
            out << "dloop " << c.u;
            break;
        }
        out << ' ' << g.element_name(c.voltage) << '\n';
    }
    return out.str();
}

MixedGraph lift(const VoltageBaseGraph& vb, const FiniteGroup& g)
{
    const int n = g.order();
    if (static_cast<long long>(vb.order) * n > 1'000'000)
        throw Error(ErrorKind::TooLarge, "lift would exceed 10^6 vertices");
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (const auto& c : vb.carriers) {
        if (c.voltage < 0 || c.voltage >= n)
            throw Error(ErrorKind::IndexOutOfRange, "voltage " + std::to_string(c.voltage));
        switch (c.kind) {
        case CarrierKind::Edge:
            for (int h = 0; h < n; ++h)
                edges.emplace_back(c.u * n + h, c.v * n + g.mul(h, c.voltage));
            break;
        case CarrierKind::UndirectedLoop:
            if (!g.is_involution(c.voltage))
                throw Error(ErrorKind::NonInvolutoryLoopVoltage,
                    "undirected loop at " + std::to_string(c.u) + " carries " + g.element_name(c.voltage));
            for (int h = 0; h < n; ++h)
                if (h < g.mul(h, c.voltage))
                    edges.emplace_back(c.u * n + h, c.u * n + g.mul(h, c.voltage));
            break;
        case CarrierKind::Arc:
        case CarrierKind::DirectedLoop:
            for (int h = 0; h < n; ++h)
                arcs.push_back({c.u * n + h, c.v * n + g.mul(h, c.voltage)});
            break;
        }
    }
    return MixedGraph::build(vb.order * n, std::move(edges), std::move(arcs));
}

std::vector<CayleyHit> cayley_search(const FiniteGroup& g, int target_k, int jobs)
{
    const auto invs = g.involutions();
    if (invs.empty())
        throw Error(ErrorKind::NoInvolution, g.name() + " has no involution");
    std::vector<std::pair<int, int>> pairs;
    for (int s : invs)
        for (int a = 0; a < g.order(); ++a)
            if (a != g.identity() && !g.is_involution(a))
                pairs.emplace_back(s, a);
    const int n = g.order();
    // Cayley graphs are vertex-transitive: the eccentricity of the identity
    // is the diameter.
    std::vector<int> diam(pairs.size(), -1);
    auto work = [&](std::size_t begin, std::size_t step) {
        std::vector<int> dist;
        std::vector<int> queue;
        for (std::size_t i = begin; i < pairs.size(); i += step) {
            const auto [s, a] = pairs[i];
            dist.assign(n, -1);
            queue.clear();
            dist[g.identity()] = 0;
            queue.push_back(g.identity());
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int x = queue[head];
                for (int y : {g.mul(x, s), g.mul(x, a)})
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            diam[i] = static_cast<int>(queue.size()) == n ? dist[queue.back()] : -1;
        }
    };
    const int threads = std::max(1, jobs);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
        for (auto& th : pool)
            th.join();
    }
    std::map<CanonicalForm, CayleyHit> unique;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (diam[i] < 0 || diam[i] > target_k)
            continue;
        const auto [s, a] = pairs[i];
        CayleyHit hit{s, a, diam[i], canonical_form(cayley_mixed(g, {s}, {a}))};
        unique.emplace(hit.form, hit);
    }
    std::vector<CayleyHit> out;
    for (auto& [_, hit] : unique)
        out.push_back(std::move(hit));
    std::stable_sort(out.begin(), out.end(), [](const CayleyHit& x, const CayleyHit& y) { return x.diameter < y.diameter; });
    return out;
}

VoltageSearchResult voltage_search(const VoltageBaseGraph& shape, const FiniteGroup& g, const VoltageSearchOptions& opts)
{
    VoltageSearchResult result;
    const int m = static_cast<int>(shape.carriers.size());
    // Spanning forest of the underlying graph; its carriers keep the identity.
    std::vector<int> parent(shape.order);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<int>> domains(m);
    const auto invs = g.involutions();
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < m; ++i) {
        const Carrier& c = shape.carriers[i];
        if ((c.kind == CarrierKind::Edge || c.kind == CarrierKind::Arc) && find(c.u) != find(c.v)) {
            parent[find(c.u)] = find(c.v);
            continue;
        }
        if (c.kind == CarrierKind::UndirectedLoop) {
            if (invs.empty())
                throw Error(ErrorKind::NoInvolution, g.name() + " has no involution for an undirected loop");
            domains[i] = invs;
        } else {
            domains[i] = all;
        }
        result.free_carriers.push_back(i);
    }
    std::uint64_t space = 1;
    for (int i : result.free_carriers) {
        const auto d = static_cast<std::uint64_t>(domains[i].size());
        space = space > UINT64_MAX / d ? UINT64_MAX : space * d;
    }
    result.space_size = space;
    result.exhaustive = space <= opts.budget;
    result.budget_exhausted = !result.exhaustive;
    if (!result.exhaustive && !opts.seed)
        throw Error(ErrorKind::InvalidArgument, "sampling the voltage space requires a seed");
    const std::uint64_t count = result.exhaustive ? space : opts.budget;
    const bool regular_shape = base_is_regular(shape);
    const std::size_t keep = static_cast<std::size_t>(std::max(1, opts.keep));

    auto assignment = [&](std::uint64_t idx) {
        std::vector<int> volt(m, g.identity());
        if (result.exhaustive) {
            std::uint64_t r = idx;
            for (auto it = result.free_carriers.rbegin(); it != result.free_carriers.rend(); ++it) {
                const auto& d = domains[*it];
                volt[*it] = d[r % d.size()];
                r /= d.size();
            }
        } else {
            std::seed_seq seq{static_cast<std::uint32_t>(*opts.seed), static_cast<std::uint32_t>(*opts.seed >> 32),
                static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
            std::mt19937_64 rng(seq);
            for (int i : result.free_carriers) {
                const auto& d = domains[i];
                volt[i] = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
            }
        }
        return volt;
    };

    const int threads = std::max(1, opts.jobs);
    std::vector<std::vector<Ranked>> local(threads);
    std::atomic<std::uint64_t> hits{0};
    auto work = [&](int t) {
        std::vector<int> dist, queue;
        auto& best = local[t];
        for (std::uint64_t idx = static_cast<std::uint64_t>(t); idx < count; idx += threads) {
            auto volt = assignment(idx);
            const auto d = lift_diameter(shape.order, g, fiber_moves(shape, g, volt), dist, queue);
            if (d && opts.target_k > 0 && *d <= opts.target_k)
                ++hits;
            Ranked r{d ? *d : INT_MAX, idx, std::move(volt)};
            if (best.size() < keep || r < best.back()) {
                best.insert(std::upper_bound(best.begin(), best.end(), r), std::move(r));
                if (best.size() > keep)
                    best.pop_back();
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
        for (auto& th : pool)
            th.join();
    }
    result.examined = count;
    result.hits = hits.load();
    std::vector<Ranked> merged;
    for (auto& v : local)
        for (auto& r : v)
            merged.push_back(std::move(r));
    std::sort(merged.begin(), merged.end());
    if (merged.size() > keep)
        merged.resize(keep);
    for (auto& r : merged) {
        VoltageAssignment a;
        a.voltages = std::move(r.voltages);
        if (r.diameter != INT_MAX)
            a.diameter = r.diameter;
        if (regular_shape) {
            VoltageBaseGraph vb = shape;
            for (int i = 0; i < m; ++i)
                vb.carriers[i].voltage = a.voltages[i];
            try {
                a.regular = is_totally_regular(lift(vb, g), 1, 1);
            } catch (const Error&) {
                a.regular = false;
            }
        }
        result.best.push_back(std::move(a));
    }
    std::stable_sort(result.best.begin(), result.best.end(),
        [](const VoltageAssignment& x, const VoltageAssignment& y) { return x.regular && !y.regular; });
    return result;
}

} // namespace mixedmoore::algebra
