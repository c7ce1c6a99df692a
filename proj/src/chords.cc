#include <l21/chords.hh>
#include <l21/errors.hh>
#include <l21/gadgets.hh>

#include <algorithm>
#include <array>

namespace l21 {

MonotoneFormula monotonize(const Nae3SatFormula& formula)
{
    MonotoneFormula m;
    m.formula.num_vars = formula.num_vars;
    for (int v = 1; v <= formula.num_vars; ++v)
        m.source.push_back({v, true});

    std::vector<int> partner(formula.num_vars + 1, 0);
    for (const Clause& clause : formula.clauses)
        for (const Literal& lit : clause)
            if (!lit.positive)
                partner[lit.var] = -1;
    for (int v = 1; v <= formula.num_vars; ++v)
        if (partner[v] == -1) {
            partner[v] = ++m.formula.num_vars;
            m.source.push_back({v, false});
        }

    for (const Clause& clause : formula.clauses) {
        Clause mono = clause;
        for (Literal& lit : mono)
            if (!lit.positive)
                lit = {partner[lit.var], true};
        m.formula.clauses.push_back(mono);
    }
    for (int v = 1; v <= formula.num_vars; ++v)
        if (partner[v] > 0) {
            const Literal bar{partner[v], true};
            m.formula.clauses.push_back({Literal{v, true}, bar, bar});
        }
    return m;
}

Assignment extend_assignment(const MonotoneFormula& m, const Assignment& a)
{
    const auto originals = std::count_if(m.source.begin(), m.source.end(), [](const Literal& s) { return s.positive; });
    if (static_cast<std::ptrdiff_t>(a.values.size()) != originals)
        throw ValidationError("assignment has " + std::to_string(a.values.size()) + " values for "
            + std::to_string(originals) + " variables");
    Assignment ext;
    for (const Literal& src : m.source)
        ext.values.push_back(src.positive ? a[src.var] : !a[src.var]);
    return ext;
}

Assignment project_assignment(const MonotoneFormula& m, const Assignment& a)
{
    if (static_cast<int>(a.values.size()) != m.formula.num_vars)
        throw ValidationError("assignment does not match the monotone formula");
    Assignment proj;
    for (std::size_t i = 0; i < m.source.size(); ++i)
        if (m.source[i].positive)
            proj.values.push_back(a.values[i]);
    return proj;
}

void validate_chords(const ChordSystem& cs)
{
    const int slots = 6 * cs.num_blocks;
    if (static_cast<int>(cs.slot_vertex.size()) != slots || static_cast<int>(cs.slot_x.size()) != slots
        || static_cast<int>(cs.chord_of_slot.size()) != slots)
        throw ValidationError("chord system has " + std::to_string(cs.slot_vertex.size()) + " slots for "
            + std::to_string(cs.num_blocks) + " blocks");
    std::vector<int> seen(slots, 0);
    for (std::size_t i = 0; i < cs.chords.size(); ++i) {
        const Chord& c = cs.chords[i];
        if (c.low < 0 || c.high >= slots || c.low >= c.high)
            throw ValidationError("chord " + std::to_string(i) + " has bad ends");
        for (int s : {c.low, c.high}) {
            ++seen[s];
            if (cs.chord_of_slot[s] != static_cast<int>(i))
                throw ValidationError("slot " + std::to_string(s) + " does not point back to its chord");
        }
    }
    for (int s = 0; s < slots; ++s)
        if (seen[s] != 1)
            throw ValidationError("slot " + std::to_string(s) + " lies on " + std::to_string(seen[s]) + " chords");
    for (int s = 1; s < slots; ++s)
        if (cs.slot_x[s] <= cs.slot_x[s - 1])
            throw ValidationError("slot abscissae must increase");
}

bool chords_interleave(const Chord& a, const Chord& b)
{
    return (a.low < b.low && b.low < a.high && a.high < b.high) || (b.low < a.low && a.low < b.high && b.high < a.high);
}

int count_interleaving(const ChordSystem& cs)
{
    int count = 0;
    for (std::size_t i = 0; i < cs.chords.size(); ++i)
        for (std::size_t j = i + 1; j < cs.chords.size(); ++j)
            count += chords_interleave(cs.chords[i], cs.chords[j]);
    return count;
}

namespace {
    using i128 = __int128;

    struct P {
        i128 x;
        i128 y;
    };

    P at(const std::vector<std::int64_t>& xs, int slot)
    {
        const i128 x = xs[slot];
        return {x, x * x};
    }

    i128 cross(P a, P b) { return a.x * b.y - a.y * b.x; }
    P minus(P a, P b) { return {a.x - b.x, a.y - b.y}; }

    // Parameter of the crossing along `chord` as a fraction with positive denominator.
    std::pair<i128, i128> param(const std::vector<std::int64_t>& xs, const Chord& chord, const Chord& other)
    {
        const P a = at(xs, chord.low), b = at(xs, chord.high), c = at(xs, other.low), d = at(xs, other.high);
        i128 num = cross(minus(c, a), minus(d, c));
        i128 den = cross(minus(b, a), minus(d, c));
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return {num, den};
    }

    int compare_params(const std::vector<std::int64_t>& xs, const Chord& chord, const Chord& a, const Chord& b)
    {
        auto [na, da] = param(xs, chord, a);
        auto [nb, db] = param(xs, chord, b);
        const i128 lhs = na * db, rhs = nb * da;
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }

    // True when some chord ending at `slot` passes through the crossing of two others.
    bool concurrent_at(const std::vector<std::int64_t>& xs, const std::vector<Chord>& chords, int slot)
    {
        std::vector<const Chord*> placed;
        for (const Chord& c : chords)
            if (c.high <= slot)
                placed.push_back(&c);
        for (const Chord* g : placed) {
            if (g->high != slot)
                continue;
            std::vector<const Chord*> crossing;
            for (const Chord* d : placed)
                if (d != g && chords_interleave(*g, *d))
                    crossing.push_back(d);
            for (std::size_t i = 0; i < crossing.size(); ++i)
                for (std::size_t j = i + 1; j < crossing.size(); ++j)
                    if (compare_params(xs, *g, *crossing[i], *crossing[j]) == 0)
                        return true;
        }
        return false;
    }
}

int compare_along(const ChordSystem& cs, const Chord& chord, const Chord& a, const Chord& b)
{
    return compare_params(cs.slot_x, chord, a, b);
}

int crossing_sign(const ChordSystem& cs, const Chord& a, const Chord& b)
{
    const i128 c = cross(minus(at(cs.slot_x, a.high), at(cs.slot_x, a.low)),
        minus(at(cs.slot_x, b.high), at(cs.slot_x, b.low)));
    return c > 0 ? 1 : c < 0 ? -1 : 0;
}

CubicStage nae_to_cubic(const Nae3SatFormula& monotone)
{
    if (monotone.clauses.empty())
        throw ValidationError("formula has no clauses");
    for (const Clause& clause : monotone.clauses)
        for (const Literal& lit : clause)
            if (!lit.positive)
                throw ValidationError("nae_to_cubic expects a monotone formula");

    const GadgetInstance k = build_clause_gadget();
    const std::array<const char*, 6> slot_ports{"r3", "q3", "r2", "q2", "r1", "q1"};
    std::vector<bool> removed(k.graph.num_vertices(), false);
    for (const char* p : slot_ports)
        removed[k.ports.at(p)] = true;

    CubicStage st;
    const int blocks = static_cast<int>(monotone.clauses.size());
    st.chords.num_blocks = blocks;
    for (int c = 0; c < blocks; ++c) {
        std::vector<VertexId> ids(k.graph.num_vertices(), -1);
        for (VertexId x = 0; x < k.graph.num_vertices(); ++x)
            if (!removed[x])
                ids[x] = st.graph.add_vertex(Role::Original, k.graph.name(x) + "." + std::to_string(c));
        for (const Edge& e : k.graph.edges())
            if (ids[e.u] >= 0 && ids[e.v] >= 0)
                st.graph.add_edge(ids[e.u], ids[e.v]);
        for (const char* p : slot_ports) {
            st.chords.slot_port.push_back(p);
            st.chords.slot_vertex.push_back(ids[k.graph.neighbours(k.ports.at(p))[0]]);
        }
        for (int t = 1; t <= 3; ++t) {
            const int var = monotone.clauses[c][t - 1].var;
            st.literal.resize(st.graph.num_vertices(), 0);
            st.literal[ids[k.ports.at("o" + std::to_string(t))]] = var;
            st.literal[ids[k.ports.at("p" + std::to_string(t))]] = var;
        }
        st.block_ids.push_back(std::move(ids));
    }
    st.literal.resize(st.graph.num_vertices(), 0);

    auto slot_of = [&](int block, char port, int t) {
        const std::string name = std::string(1, port) + std::to_string(t);
        return 6 * block
            + static_cast<int>(std::find(slot_ports.begin(), slot_ports.end(), name) - slot_ports.begin());
    };
    std::vector<std::vector<std::pair<int, int>>> occurrences(monotone.num_vars + 1);
    for (int c = 0; c < blocks; ++c)
        for (int t = 1; t <= 3; ++t)
            occurrences[monotone.clauses[c][t - 1].var].emplace_back(c, t);

    st.chords.chord_of_slot.assign(6 * blocks, -1);
    for (int var = 1; var <= monotone.num_vars; ++var) {
        const auto& occ = occurrences[var];
        for (std::size_t j = 0; j < occ.size(); ++j) {
            const auto [c1, t1] = occ[j];
            const auto [c2, t2] = occ[(j + 1) % occ.size()];
            const int r = slot_of(c1, 'r', t1), q = slot_of(c2, 'q', t2);
            const int index = static_cast<int>(st.chords.chords.size());
            st.chords.chords.push_back({std::min(r, q), std::max(r, q), var});
            st.chords.chord_of_slot[r] = st.chords.chord_of_slot[q] = index;
            st.identifying.push_back(st.graph.add_edge(st.chords.slot_vertex[r], st.chords.slot_vertex[q]));
        }
    }

    auto& xs = st.chords.slot_x;
    xs.assign(6 * blocks, 0);
    for (int s = 1; s < 6 * blocks; ++s) {
        xs[s] = xs[s - 1] + 1;
        while (concurrent_at(xs, st.chords.chords, s))
            ++xs[s];
    }

    std::vector<std::vector<VertexId>> order(st.graph.num_vertices());
    for (int c = 0; c < blocks; ++c) {
        const auto& ids = st.block_ids[c];
        for (VertexId x = 0; x < k.graph.num_vertices(); ++x) {
            if (ids[x] < 0)
                continue;
            for (VertexId y : k.rot.around(x)) {
                if (ids[y] >= 0) {
                    order[ids[x]].push_back(ids[y]);
                    continue;
                }
                const int s = slot_of(c, k.graph.name(y)[0], k.graph.name(y)[1] - '0');
                const Chord& chord = st.chords.chords[st.chords.chord_of_slot[s]];
                order[ids[x]].push_back(st.chords.slot_vertex[chord.low == s ? chord.high : chord.low]);
            }
        }
    }
    st.rot = RotationSystem(std::move(order));
    validate_chords(st.chords);
    if (!check_regular(st.graph, 3))
        throw InvariantError("cubic stage: graph is not 3-regular");
    return st;
}

} // namespace l21
