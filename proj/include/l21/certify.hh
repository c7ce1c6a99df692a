#pragma once

#include <l21/gadgets.hh>
#include <l21/parallel.hh>
#include <l21/serialization.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace l21 {

/// Outcome of one exhaustive lemma check. Behaviours are encoded as integer tuples whose
/// meaning depends on the gadget (see each certifier).
struct CertReport {
    std::string lemma;
    GadgetKind kind;
    std::optional<int> k;
    std::vector<std::vector<int>> observed;
    std::vector<std::vector<int>> expected;
    bool pass = false;
    std::int64_t count = 0; // colourings, boundary patterns or labellings examined
    std::string detail;     // first failed side condition, if any
};

json report_to_json(const CertReport& report);

/// Observed tuples are (index of the monochromatic edge among ab, mi, ln, colour of b).
CertReport certify_H(const GadgetInstance& h);
CertReport certify_H();

/// Boundary order a, o1, p1, q1, r1, o2, ..., r3; a tuple is one extendable pattern
/// with bit i set when boundary vertex i is White.
std::vector<std::string> clause_boundary();
CertReport certify_clause_gadget(const GadgetInstance& clause, Exec exec = Exec::Parallel);
CertReport certify_clause_gadget(Exec exec = Exec::Parallel);

/// Boundary order a, b, w, v, z1, z2, z3, z4, encoded as for the clause gadget.
std::vector<std::string> uncrossing_boundary();
CertReport certify_uncrossing(const GadgetInstance& u, Exec exec = Exec::Parallel);
CertReport certify_uncrossing(Exec exec = Exec::Parallel);

inline constexpr int max_certified_hprime = 9;
inline constexpr int max_certified_edge_gadget = 8;

/// Tuples are (L(c), L(d)) over all labellings of span k.
CertReport certify_Hprime(int k);

/// Tuples are (L(u), L(v), L(a_u), L(a_v)) with L(u), L(v) in {0, k}.
CertReport certify_edge_gadget(int k, Exec exec = Exec::Parallel);

/// The four-case table for G_k, deduplicated and ascending.
std::vector<BoundaryTuple> expected_edge_behaviour(int k);

} // namespace l21
