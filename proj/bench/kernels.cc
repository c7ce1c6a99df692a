#include <l21/certify.hh>
#include <l21/colouring.hh>
#include <l21/gadgets.hh>
#include <l21/labelling.hh>
#include <l21/nae.hh>

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

using namespace l21;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

// (x1,x1,x1) makes the formula unsatisfiable, so the brute force visits every assignment.
Nae3SatFormula unsat_formula(int vars, int clauses)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> var(1, vars);
    std::ostringstream text;
    text << "p cnf " << vars << ' ' << clauses + 1 << "\n1 1 1 0\n";
    for (int c = 0; c < clauses; ++c) {
        for (int i = 0; i < 3; ++i)
            text << (rng() % 2 ? var(rng) : -var(rng)) << ' ';
        text << "0\n";
    }
    return parse_formula(text.str());
}

Graph petersen()
{
    Graph g;
    for (int v = 0; v < 10; ++v)
        g.add_vertex(Role::Original);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

Graph random_graph(int n, double p)
{
    std::mt19937 rng(11);
    std::bernoulli_distribution edge(p);
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(Role::Original);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (edge(rng))
                g.add_edge(v, w);
    return g;
}

void BM_NaeBruteforce(benchmark::State& state)
{
    const auto f = unsat_formula(22, 40);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_nae_bruteforce(f, exec_of(state)));
}

void BM_LabellingBruteforce(benchmark::State& state)
{
    // The Petersen graph needs span 9, so span 6 is refuted exhaustively.
    const Graph g = petersen();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_labelling_bruteforce(g, 6, {}, exec_of(state)));
}

void BM_BoundaryEnumeration(benchmark::State& state)
{
    const int k = 6;
    const auto g = build_edge_gadget(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_boundary_behaviour(g.graph, g.ports, k, {0, k}, exec_of(state)));
}

void BM_ColouringSweep(benchmark::State& state)
{
    const Graph g = random_graph(20, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_almost_2cpm_sweep(g, exec_of(state)));
}

void BM_ClauseCertificate(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_clause_gadget(exec_of(state)));
}

void BM_UncrossingCertificate(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_uncrossing(exec_of(state)));
}

} // namespace

BENCHMARK(BM_NaeBruteforce)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LabellingBruteforce)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoundaryEnumeration)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ColouringSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClauseCertificate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_UncrossingCertificate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
