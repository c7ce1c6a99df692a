#include <l21/certify.hh>
#include <l21/errors.hh>
#include <l21/labelling.hh>

#include <algorithm>
#include <set>

namespace l21 {

json report_to_json(const CertReport& report)
{
    json j;
    j["lemma"] = report.lemma;
    j["kind"] = std::string(kind_name(report.kind));
    j["k"] = report.k ? json(*report.k) : json(nullptr);
    j["observed"] = report.observed;
    j["expected"] = report.expected;
    j["pass"] = report.pass;
    j["count"] = report.count;
    j["detail"] = report.detail;
    return j;
}

CertReport certify_H(const GadgetInstance& h)
{
    CertReport report{"H", GadgetKind::H, std::nullopt, {}, {}, false, 0, {}};
    auto p = [&](const char* name) { return port(h.ports, name); };
    const VertexId a = p("a"), b = p("b"), m = p("m"), i = p("i"), l = p("l"), n = p("n");

    auto colourings = enumerate_almost_2cpm(h.graph);
    report.count = static_cast<std::int64_t>(colourings.size());
    bool bullets = true;
    std::set<std::vector<int>> observed;
    for (const auto& c : colourings) {
        const bool mono[3] = {c[a] == c[b], c[m] == c[i], c[l] == c[n]};
        const int mono_count = mono[0] + mono[1] + mono[2];
        const int which = mono_count == 1 ? static_cast<int>(std::find(mono, mono + 3, true) - mono) : -1;
        observed.insert({which, static_cast<int>(c[b])});
        if (mono_count != 1 && bullets) {
            bullets = false;
            report.detail = "a colouring has " + std::to_string(mono_count) + " of ab, mi, ln monochromatic";
        }
        if ((c[i] != c[b] || c[l] != c[b]) && bullets) {
            bullets = false;
            report.detail = "b, i, l are not all the same colour";
        }
        for (const char* x : {"o", "p", "q", "r"})
            if (c[p(x)] == c[b] && bullets) {
                bullets = false;
                report.detail = std::string(x) + " shares the colour of b";
            }
    }
    report.observed.assign(observed.begin(), observed.end());
    for (int e = 0; e < 3; ++e)
        for (int colour = 0; colour < 2; ++colour)
            report.expected.push_back({e, colour});
    report.pass = bullets && report.count == 6 && report.observed == report.expected;
    if (report.count != 6 && report.detail.empty())
        report.detail = "found " + std::to_string(report.count) + " colourings, expected 6";
    return report;
}

CertReport certify_H() { return certify_H(build_H()); }

namespace {
    std::vector<std::vector<int>> extendable_patterns(const Graph& graph, const std::vector<VertexId>& boundary, Exec exec)
    {
        const int total = 1 << boundary.size();
        std::vector<char> ok(total, 0);
        auto check = [&](int mask) {
            ColourPins pins;
            for (std::size_t i = 0; i < boundary.size(); ++i)
                pins.emplace_back(boundary[i], static_cast<Colour>((mask >> i) & 1));
            ok[mask] = is_extendable(graph, MatchingMode::Almost, pins);
        };
        if (exec == Exec::Serial) {
            for (int mask = 0; mask < total; ++mask)
                check(mask);
        }
        else {
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 16)
            for (int mask = 0; mask < total; ++mask)
                check(mask);
        }
        std::vector<std::vector<int>> result;
        for (int mask = 0; mask < total; ++mask)
            if (ok[mask])
                result.push_back({mask});
        return result;
    }

    std::vector<VertexId> boundary_ids(const GadgetInstance& g, const std::vector<std::string>& names)
    {
        std::vector<VertexId> ids;
        for (const auto& n : names)
            ids.push_back(port(g.ports, n));
        return ids;
    }

    int bit(int mask, int i) { return (mask >> i) & 1; }
}

std::vector<std::string> clause_boundary()
{
    std::vector<std::string> names{"a"};
    for (int t = 1; t <= 3; ++t)
        for (const char* x : {"o", "p", "q", "r"})
            names.push_back(x + std::to_string(t));
    return names;
}

CertReport certify_clause_gadget(const GadgetInstance& clause, Exec exec)
{
    CertReport report{"clause gadget", GadgetKind::ClauseK, std::nullopt, {}, {}, false, 0, {}};
    const auto boundary = boundary_ids(clause, clause_boundary());
    report.observed = extendable_patterns(clause.graph, boundary, exec);
    report.count = 1 << boundary.size();
    for (int mask = 0; mask < report.count; ++mask) {
        bool uniform = true;
        int matching_a = 0;
        for (int t = 0; t < 3; ++t) {
            const int first = bit(mask, 1 + 4 * t);
            for (int j = 1; j < 4; ++j)
                uniform = uniform && bit(mask, 1 + 4 * t + j) == first;
            matching_a += first == bit(mask, 0);
        }
        if (uniform && matching_a == 2)
            report.expected.push_back({mask});
    }
    report.pass = report.observed == report.expected;
    if (!report.pass)
        report.detail = std::to_string(report.observed.size()) + " extendable patterns, expected "
            + std::to_string(report.expected.size());
    return report;
}

CertReport certify_clause_gadget(Exec exec) { return certify_clause_gadget(build_clause_gadget(), exec); }

std::vector<std::string> uncrossing_boundary() { return {"a", "b", "w", "v", "z1", "z2", "z3", "z4"}; }

CertReport certify_uncrossing(const GadgetInstance& u, Exec exec)
{
    CertReport report{"uncrossing gadget", GadgetKind::UncrossU, std::nullopt, {}, {}, false, 0, {}};
    const auto boundary = boundary_ids(u, uncrossing_boundary());
    report.observed = extendable_patterns(u.graph, boundary, exec);
    report.count = 1 << boundary.size();
    for (int mask = 0; mask < report.count; ++mask) {
        // a, b, z3, z4 share one colour and w, v, z1, z2 another.
        const bool first = bit(mask, 0) == bit(mask, 1) && bit(mask, 0) == bit(mask, 6) && bit(mask, 0) == bit(mask, 7);
        const bool second = bit(mask, 2) == bit(mask, 3) && bit(mask, 2) == bit(mask, 4) && bit(mask, 2) == bit(mask, 5);
        if (first && second)
            report.expected.push_back({mask});
    }
    report.pass = report.observed == report.expected;
    if (!report.pass)
        report.detail = std::to_string(report.observed.size()) + " extendable patterns, expected "
            + std::to_string(report.expected.size());
    return report;
}

CertReport certify_uncrossing(Exec exec) { return certify_uncrossing(build_uncrossing(), exec); }

CertReport certify_Hprime(int k)
{
    if (k > max_certified_hprime)
        throw CapacityError("H' certification is limited to k <= " + std::to_string(max_certified_hprime));
    const auto hp = build_Hprime(k);
    CertReport report{"H'", GadgetKind::Hprime, k, {}, {}, false, 0, {}};
    const VertexId c = hp.named("c"), d = hp.named("d"), g = hp.named("g");
    std::vector<VertexId> fans;
    for (int j = 1; j <= k - 3; ++j)
        fans.push_back(hp.named("f" + std::to_string(j)));

    std::set<std::vector<int>> observed;
    bool sides_ok = true;
    auto outcome = for_each_labelling(hp.graph, k, {}, unlimited, [&](const std::vector<int>& L) {
        ++report.count;
        observed.insert({L[c], L[d]});
        if (std::min(L[g], L[d]) != 0 || std::max(L[g], L[d]) != k) {
            sides_ok = false;
            report.detail = "a labelling has {L(g),L(d)} != {0,k}";
        }
        std::vector<int> f;
        for (VertexId x : fans)
            f.push_back(L[x]);
        std::sort(f.begin(), f.end());
        for (int j = 0; j < k - 3; ++j)
            if (f[j] != j + 2) {
                sides_ok = false;
                report.detail = "a labelling gives the f vertices labels other than 2..k-2";
                break;
            }
        return true;
    });
    if (outcome.outcome == Outcome::Exhausted)
        throw CapacityError("H' enumeration ran out of budget");
    report.observed.assign(observed.begin(), observed.end());
    report.expected = {{0, k}, {1, k}, {k - 1, 0}, {k, 0}};
    std::sort(report.expected.begin(), report.expected.end());
    report.pass = sides_ok && report.observed == report.expected;
    if (!report.pass && report.detail.empty())
        report.detail = "feasible (L(c),L(d)) set differs";
    return report;
}

std::vector<BoundaryTuple> expected_edge_behaviour(int k)
{
    std::set<BoundaryTuple> table{
        {0, 0, 2, k}, {0, 0, k, 2}, {0, 0, k - 2, k}, {0, 0, k, k - 2},
        {k, k, 2, 0}, {k, k, 0, 2}, {k, k, k - 2, 0}, {k, k, 0, k - 2},
        {k, 0, 1, k - 1}, {0, k, k - 1, 1},
    };
    return {table.begin(), table.end()};
}

CertReport certify_edge_gadget(int k, Exec exec)
{
    if (k > max_certified_edge_gadget)
        throw CapacityError("edge gadget certification is limited to k <= " + std::to_string(max_certified_edge_gadget));
    const auto g = build_edge_gadget(k);
    CertReport report{"edge gadget", g.kind, k, {}, {}, false, 0, {}};
    auto observed = enumerate_boundary_behaviour(g.graph, g.ports, k, {0, k}, exec);
    report.count = 4 * (k + 1) * (k + 1);
    for (const auto& t : observed)
        report.observed.push_back({t.begin(), t.end()});
    for (const auto& t : expected_edge_behaviour(k))
        report.expected.push_back({t.begin(), t.end()});
    report.pass = report.observed == report.expected;
    if (!report.pass)
        report.detail = "boundary behaviour differs from the four-case table";
    return report;
}

} // namespace l21
