#pragma once

#include <l21/parallel.hh>

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace l21 {

struct Literal {
    int var;
    bool positive;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Nae3SatFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const Nae3SatFormula&, const Nae3SatFormula&) = default;
};

/// values[i] is the value of variable i + 1.
struct Assignment {
    std::vector<bool> values;

    bool operator[](int var) const { return values.at(var - 1); }
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// DIMACS CNF with exactly three literals per clause line. Throws ParseError.
Nae3SatFormula parse_formula(std::istream& in);
Nae3SatFormula parse_formula(const std::string& text);
std::string format_formula(const Nae3SatFormula& formula);

bool literal_value(const Literal& lit, const Assignment& a);

/// Throws ValidationError when the assignment does not cover exactly the formula's variables.
bool check_nae(const Nae3SatFormula& formula, const Assignment& a);

/// Index of the first clause whose literals all agree, if any.
std::optional<int> first_violated_clause(const Nae3SatFormula& formula, const Assignment& a);

inline constexpr int max_bruteforce_vars = 30;

/// Lexicographically first NAE-satisfying assignment (false < true, variable 1 most
/// significant), or nullopt. Throws CapacityError above max_bruteforce_vars.
std::optional<Assignment> solve_nae_bruteforce(const Nae3SatFormula& formula, Exec exec = Exec::Parallel);

/// "v 1 -2 3 0"
std::string format_assignment(const Assignment& a);
Assignment parse_assignment(const std::string& text, int num_vars);

} // namespace l21
