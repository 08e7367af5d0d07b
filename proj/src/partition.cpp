#include "wreath/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wreath {

int Partition::num_blocks() const {
    int b = 0;
    for (int id : block) b = std::max(b, id + 1);
    return b;
}

int Partition::through_blocks() const {
    int b = num_blocks();
    std::vector<char> up(b, 0), down(b, 0);
    for (int i = 0; i < k; ++i) up[block[i]] = 1;
    for (int i = k; i < k + l; ++i) down[block[i]] = 1;
    int t = 0;
    for (int j = 0; j < b; ++j)
        if (up[j] && down[j]) ++t;
    return t;
}

std::vector<std::vector<int>> Partition::block_points() const {
    std::vector<std::vector<int>> out(num_blocks());
    for (int i = 0; i < points(); ++i) out[block[i]].push_back(i);
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> out(num_blocks(), 0);
    for (int id : block) ++out[id];
    return out;
}

uint64_t Partition::key() const {
    uint64_t h = ((uint64_t)k << 4) | (uint64_t)l;
    for (int id : block) h = (h << 4) | (uint64_t)id;
    return h;
}

Partition canonicalize(int k, int l, const std::vector<int>& raw) {
    Partition p;
    p.k = k;
    p.l = l;
    p.block.resize(raw.size());
    std::map<int, int> relabel;
    for (size_t i = 0; i < raw.size(); ++i) {
        auto it = relabel.find(raw[i]);
        if (it == relabel.end())
            it = relabel.emplace(raw[i], (int)relabel.size()).first;
        p.block[i] = it->second;
    }
    return p;
}

Partition empty_partition() { return Partition{}; }
Partition identity_partition() { return canonicalize(1, 1, {0, 0}); }
Partition cup_partition() { return canonicalize(0, 2, {0, 0}); }
Partition cap_partition() { return canonicalize(2, 0, {0, 0}); }
Partition cross_partition() { return canonicalize(2, 2, {0, 1, 1, 0}); }
Partition one_block(int k, int l) {
    return canonicalize(k, l, std::vector<int>(k + l, 0));
}
Partition singleton_upper() { return canonicalize(1, 0, {0}); }
Partition singleton_lower() { return canonicalize(0, 1, {0}); }

Partition tensor(const Partition& p, const Partition& q) {
    int bp = p.num_blocks();
    std::vector<int> raw;
    raw.reserve(p.points() + q.points());
    for (int i = 0; i < p.k; ++i) raw.push_back(p.block[i]);
    for (int i = 0; i < q.k; ++i) raw.push_back(q.block[i] + bp);
    for (int i = 0; i < p.l; ++i) raw.push_back(p.block[p.k + i]);
    for (int i = 0; i < q.l; ++i) raw.push_back(q.block[q.k + i] + bp);
    return canonicalize(p.k + q.k, p.l + q.l, raw);
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

Composition compose(const Partition& p, const Partition& q) {
    if (q.l != p.k)
        throw std::invalid_argument(
            "compose: inner sizes differ (q has " + std::to_string(q.l) +
            " lower points, p has " + std::to_string(p.k) + " upper points)");
    int k = q.k, l = q.l, m = p.l;
    // Nodes: 0..k-1 upper of q; k..k+l-1 middle; k+l..k+l+m-1 lower of p.
    UnionFind uf(k + l + m);
    std::map<int, int> first_of_block;
    for (int i = 0; i < k + l; ++i) {
        auto it = first_of_block.find(q.block[i]);
        if (it == first_of_block.end())
            first_of_block.emplace(q.block[i], i);
        else
            uf.unite(i, it->second);
    }
    first_of_block.clear();
    for (int i = 0; i < l + m; ++i) {
        int node = i < l ? k + i : k + i;  // p's upper j is middle node k+j
        auto it = first_of_block.find(p.block[i]);
        if (it == first_of_block.end())
            first_of_block.emplace(p.block[i], node);
        else
            uf.unite(node, it->second);
    }
    std::vector<int> raw(k + m);
    std::vector<char> has_outer(k + l + m, 0);
    for (int i = 0; i < k; ++i) {
        int r = uf.find(i);
        raw[i] = r;
        has_outer[r] = 1;
    }
    for (int i = 0; i < m; ++i) {
        int r = uf.find(k + l + i);
        raw[k + i] = r;
        has_outer[r] = 1;
    }
    int loops = 0;
    for (int i = 0; i < l; ++i) {
        int r = uf.find(k + i);
        if (!has_outer[r]) {
            has_outer[r] = 1;  // count each middle-only class once
            ++loops;
        }
    }
    return Composition{canonicalize(k, m, raw), loops};
}

Partition involution(const Partition& p) {
    std::vector<int> raw(p.points());
    for (int i = 0; i < p.l; ++i) raw[i] = p.block[p.k + i];
    for (int i = 0; i < p.k; ++i) raw[p.l + i] = p.block[i];
    return canonicalize(p.l, p.k, raw);
}

bool is_noncrossing(const Partition& p) {
    // Cyclic reading order: u1..uk then ll..l1.
    std::vector<int> seq;
    seq.reserve(p.points());
    for (int i = 0; i < p.k; ++i) seq.push_back(p.block[i]);
    for (int i = p.l - 1; i >= 0; --i) seq.push_back(p.block[p.k + i]);
    int b = p.num_blocks();
    // Two blocks cross iff their points alternate a,b,a,b along the cycle;
    // alternation is invariant under the choice of cut point.
    for (int a = 0; a < b; ++a)
        for (int c = a + 1; c < b; ++c) {
            int last = -1, switches = 0;
            for (int id : seq) {
                if (id != a && id != c) continue;
                if (id != last) {
                    if (last != -1) ++switches;
                    last = id;
                }
            }
            if (switches >= 3) return false;
        }
    return true;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::ALL: return "ALL";
        case Family::NC: return "NC";
        case Family::NC2: return "NC2";
        case Family::NCEV: return "NCEV";
        case Family::PAIR: return "PAIR";
        case Family::EVEN: return "EVEN";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    std::string u;
    for (char c : name) u.push_back((char)std::toupper((unsigned char)c));
    if (u == "ALL") return Family::ALL;
    if (u == "NC") return Family::NC;
    if (u == "NC2") return Family::NC2;
    if (u == "NCEV") return Family::NCEV;
    if (u == "PAIR") return Family::PAIR;
    if (u == "EVEN") return Family::EVEN;
    throw std::invalid_argument("unknown partition family: " + name);
}

bool family_member(Family f, const Partition& p) {
    auto sizes = p.block_sizes();
    auto all_pairs = [&] {
        return std::all_of(sizes.begin(), sizes.end(),
                           [](int s) { return s == 2; });
    };
    auto all_even = [&] {
        return std::all_of(sizes.begin(), sizes.end(),
                           [](int s) { return s % 2 == 0; });
    };
    switch (f) {
        case Family::ALL: return true;
        case Family::NC: return is_noncrossing(p);
        case Family::NC2: return all_pairs() && is_noncrossing(p);
        case Family::NCEV: return all_even() && is_noncrossing(p);
        case Family::PAIR: return all_pairs();
        case Family::EVEN: return all_even();
    }
    return false;
}

std::vector<Partition> enumerate_family(Family f, int k, int l, int bound) {
    int n = k + l;
    if (n > bound)
        throw std::length_error("enumeration bound exceeded: " +
                                std::to_string(n) + " points > bound " +
                                std::to_string(bound));
    std::vector<Partition> out;
    // Restricted growth strings are exactly the canonical forms.
    std::vector<int> rgs(n, 0);
    if (n == 0) {
        Partition p = empty_partition();
        if (family_member(f, p)) out.push_back(p);
        return out;
    }
    while (true) {
        Partition p;
        p.k = k;
        p.l = l;
        p.block = rgs;
        if (family_member(f, p)) out.push_back(std::move(p));
        // Next restricted growth string.
        int i = n - 1;
        for (; i >= 1; --i) {
            int maxv = 0;
            for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
            if (rgs[i] <= maxv) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------
// Coloured partitions
// ---------------------------------------------------------------------

ColourSet ColourSet::single() { return from_names({"x"}, {0}); }
ColourSet ColourSet::two_colour() { return from_names({"w", "b"}, {1, 0}); }

ColourSet ColourSet::from_names(std::vector<std::string> n,
                                std::vector<int> conj) {
    if (n.size() != conj.size())
        throw std::invalid_argument("colour set: name/conjugation mismatch");
    for (size_t i = 0; i < conj.size(); ++i)
        if (conj[i] < 0 || conj[i] >= (int)n.size() ||
            conj[(size_t)conj[i]] != (int)i)
            throw std::invalid_argument(
                "colour set: conjugation is not a self-inverse map");
    ColourSet cs;
    cs.names = std::move(n);
    cs.conj = std::move(conj);
    return cs;
}

int ColourSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    throw std::invalid_argument("unknown colour: " + name);
}

std::vector<int> ColouredPartition::upper_colours() const {
    return std::vector<int>(colours.begin(), colours.begin() + base.k);
}
std::vector<int> ColouredPartition::lower_colours() const {
    return std::vector<int>(colours.begin() + base.k, colours.end());
}

std::pair<uint64_t, uint64_t> ColouredPartition::key() const {
    uint64_t c = 0;
    for (int x : colours) c = (c << 4) | (uint64_t)x;
    return {base.key(), c};
}

ColouredPartition colour_all(const Partition& p, int colour) {
    return ColouredPartition{p, std::vector<int>(p.points(), colour)};
}

ColouredPartition colour_rows(const Partition& p, const std::vector<int>& g,
                              const std::vector<int>& h) {
    if ((int)g.size() != p.k || (int)h.size() != p.l)
        throw std::invalid_argument("colour_rows: tuple sizes mismatch");
    ColouredPartition cp{p, g};
    cp.colours.insert(cp.colours.end(), h.begin(), h.end());
    return cp;
}

ColouredPartition tensor(const ColouredPartition& p,
                         const ColouredPartition& q) {
    ColouredPartition out;
    out.base = tensor(p.base, q.base);
    auto pu = p.upper_colours(), pl = p.lower_colours();
    auto qu = q.upper_colours(), ql = q.lower_colours();
    out.colours = pu;
    out.colours.insert(out.colours.end(), qu.begin(), qu.end());
    out.colours.insert(out.colours.end(), pl.begin(), pl.end());
    out.colours.insert(out.colours.end(), ql.begin(), ql.end());
    return out;
}

bool composable(const ColouredPartition& p, const ColouredPartition& q) {
    return q.base.l == p.base.k && q.lower_colours() == p.upper_colours();
}

ColouredComposition compose(const ColouredPartition& p,
                            const ColouredPartition& q) {
    if (!composable(p, q))
        throw std::invalid_argument(
            "compose: middle colourings (or sizes) do not match");
    Composition c = compose(p.base, q.base);
    ColouredPartition out;
    out.base = c.result;
    out.colours = q.upper_colours();
    auto pl = p.lower_colours();
    out.colours.insert(out.colours.end(), pl.begin(), pl.end());
    return ColouredComposition{std::move(out), c.loops};
}

ColouredPartition involution(const ColouredPartition& p) {
    ColouredPartition out;
    out.base = involution(p.base);
    out.colours = p.lower_colours();
    auto u = p.upper_colours();
    out.colours.insert(out.colours.end(), u.begin(), u.end());
    return out;
}

ColouredPartition rotate(const ColouredPartition& p, Corner corner,
                         const ColourSet& cs) {
    const Partition& b = p.base;
    int k = b.k, l = b.l;
    std::vector<int> raw, cols;
    auto push = [&](int point, bool conjugate) {
        raw.push_back(b.block[point]);
        int c = p.colours[point];
        cols.push_back(conjugate ? cs.conj[c] : c);
    };
    int nk, nl;
    switch (corner) {
        case Corner::UpperLeft:
            if (k == 0) throw std::invalid_argument("rotate: empty upper row");
            nk = k - 1;
            nl = l + 1;
            for (int i = 1; i < k; ++i) push(i, false);
            push(0, true);
            for (int i = 0; i < l; ++i) push(k + i, false);
            break;
        case Corner::UpperRight:
            if (k == 0) throw std::invalid_argument("rotate: empty upper row");
            nk = k - 1;
            nl = l + 1;
            for (int i = 0; i < k - 1; ++i) push(i, false);
            for (int i = 0; i < l; ++i) push(k + i, false);
            push(k - 1, true);
            break;
        case Corner::LowerLeft:
            if (l == 0) throw std::invalid_argument("rotate: empty lower row");
            nk = k + 1;
            nl = l - 1;
            push(k, true);
            for (int i = 0; i < k; ++i) push(i, false);
            for (int i = 1; i < l; ++i) push(k + i, false);
            break;
        case Corner::LowerRight:
            if (l == 0) throw std::invalid_argument("rotate: empty lower row");
            nk = k + 1;
            nl = l - 1;
            for (int i = 0; i < k; ++i) push(i, false);
            push(k + l - 1, true);
            for (int i = 0; i < l - 1; ++i) push(k + i, false);
            break;
        default:
            throw std::invalid_argument("rotate: bad corner");
    }
    return ColouredPartition{canonicalize(nk, nl, raw), cols};
}

ColouredPartition act_blocks(const ColouredPartition& p,
                             const std::vector<int>& x,
                             const GroupMult& mult) {
    if ((int)x.size() != p.base.num_blocks())
        throw std::invalid_argument("act_blocks: one element per block needed");
    ColouredPartition out = p;
    for (int i = 0; i < p.base.points(); ++i)
        out.colours[i] = mult(x[(size_t)p.base.block[i]], p.colours[i]);
    return out;
}

ColouredPartition canonical_e_form(const ColouredPartition& p,
                                   const GroupMult& mult,
                                   const std::function<int(int)>& inv) {
    int b = p.base.num_blocks();
    std::vector<int> x(b, -1);
    for (int i = 0; i < p.base.points(); ++i) {
        int id = p.base.block[i];
        if (x[id] == -1) x[id] = inv(p.colours[i]);
    }
    return act_blocks(p, x, mult);
}

// ---------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------

namespace {
std::string point_name(const Partition& p, int i) {
    if (i < p.k) return "u" + std::to_string(i + 1);
    return "l" + std::to_string(i - p.k + 1);
}
}  // namespace

std::string to_text(const Partition& p) {
    std::ostringstream os;
    os << "P(" << p.k << "," << p.l << ")";
    auto bp = p.block_points();
    for (auto& blk : bp) {
        os << " {";
        for (size_t j = 0; j < blk.size(); ++j) {
            if (j) os << " ";
            os << point_name(p, blk[j]);
        }
        os << "}";
    }
    return os.str();
}

std::string to_text(const ColouredPartition& p, const ColourSet& cs) {
    std::ostringstream os;
    os << "P(" << p.base.k << "," << p.base.l << ")";
    auto bp = p.base.block_points();
    for (auto& blk : bp) {
        os << " {";
        for (size_t j = 0; j < blk.size(); ++j) {
            if (j) os << " ";
            os << point_name(p.base, blk[j]) << "@"
               << cs.names[(size_t)p.colours[(size_t)blk[j]]];
        }
        os << "}";
    }
    return os.str();
}

namespace {
struct ParsedText {
    int k = 0, l = 0;
    std::vector<int> raw;               // block id per point
    std::vector<std::string> colour;    // colour name per point ("" if none)
};

ParsedText parse_text(const std::string& text) {
    ParsedText out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("partition parse error: expected '" +
                                        std::string(1, c) + "' in: " + text);
        ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("partition parse error: number "
                                        "expected in: " + text);
        return std::stoi(text.substr(start, pos - start));
    };
    expect('P');
    expect('(');
    out.k = read_int();
    expect(',');
    out.l = read_int();
    expect(')');
    out.raw.assign((size_t)(out.k + out.l), -1);
    out.colour.assign((size_t)(out.k + out.l), "");
    int next_block = 0;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        expect('{');
        int id = next_block++;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            char row = text[pos];
            if (row != 'u' && row != 'l')
                throw std::invalid_argument(
                    "partition parse error: point expected in: " + text);
            ++pos;
            int idx = read_int() - 1;
            int point = row == 'u' ? idx : out.k + idx;
            if (idx < 0 || (row == 'u' ? idx >= out.k : idx >= out.l))
                throw std::invalid_argument(
                    "partition parse error: point out of range in: " + text);
            if (out.raw[(size_t)point] != -1)
                throw std::invalid_argument(
                    "partition parse error: duplicate point in: " + text);
            out.raw[(size_t)point] = id;
            if (pos < text.size() && text[pos] == '@') {
                ++pos;
                size_t start = pos;
                while (pos < text.size() && text[pos] != ' ' &&
                       text[pos] != '}' && text[pos] != '{')
                    ++pos;
                out.colour[(size_t)point] = text.substr(start, pos - start);
            }
        }
    }
    for (int v : out.raw)
        if (v == -1)
            throw std::invalid_argument(
                "partition parse error: point missing from blocks in: " +
                text);
    return out;
}
}  // namespace

Partition parse_partition(const std::string& text) {
    ParsedText t = parse_text(text);
    return canonicalize(t.k, t.l, t.raw);
}

ColouredPartition parse_coloured(const std::string& text,
                                 const ColourSet& cs) {
    ParsedText t = parse_text(text);
    ColouredPartition out;
    out.base = canonicalize(t.k, t.l, t.raw);
    out.colours.reserve(t.colour.size());
    for (auto& c : t.colour)
        out.colours.push_back(c.empty() ? 0 : cs.index_of(c));
    return out;
}

}  // namespace wreath
