#include <l21/errors.hh>
#include <l21/nae.hh>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace l21 {

namespace {
    std::vector<std::string> tokens_of(const std::string& line)
    {
        std::istringstream ss(line);
        std::vector<std::string> result;
        for (std::string t; ss >> t;)
            result.push_back(t);
        return result;
    }

    long parse_int(const std::string& token, int line)
    {
        try {
            std::size_t used = 0;
            long value = std::stol(token, &used);
            if (used == token.size())
                return value;
        }
        catch (const std::exception&) {
        }
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
}

Nae3SatFormula parse_formula(std::istream& in)
{
    Nae3SatFormula formula;
    bool have_header = false;
    long declared_clauses = 0;
    int line_no = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokens_of(line);
        if (tokens.empty() || tokens[0][0] == 'c')
            continue;
        if (tokens[0] == "%")
            break;
        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "cnf")
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            long vars = parse_int(tokens[2], line_no);
            declared_clauses = parse_int(tokens[3], line_no);
            if (vars < 1 || vars > std::numeric_limits<int>::max() || declared_clauses < 0)
                throw ParseError(line_no, "header counts out of range");
            formula.num_vars = static_cast<int>(vars);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "clause before 'p cnf' header");

        if (tokens.back() != "0")
            throw ParseError(line_no, "clause line must end with 0");
        if (tokens.size() != 4)
            throw ParseError(line_no, "clause has " + std::to_string(tokens.size() - 1) + " literals, expected 3");
        Clause clause;
        for (int i = 0; i < 3; ++i) {
            long lit = parse_int(tokens[i], line_no);
            if (lit == 0)
                throw ParseError(line_no, "clause has " + std::to_string(i) + " literals, expected 3");
            long var = lit < 0 ? -lit : lit;
            if (var > formula.num_vars)
                throw ParseError(line_no, "variable " + std::to_string(var) + " exceeds declared count "
                    + std::to_string(formula.num_vars));
            clause[i] = {static_cast<int>(var), lit > 0};
        }
        formula.clauses.push_back(clause);
    }

    if (!have_header)
        throw ParseError(line_no, "missing 'p cnf' header");
    if (static_cast<long>(formula.clauses.size()) != declared_clauses)
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found "
            + std::to_string(formula.clauses.size()));
    return formula;
}

Nae3SatFormula parse_formula(const std::string& text)
{
    std::istringstream in(text);
    return parse_formula(in);
}

std::string format_formula(const Nae3SatFormula& formula)
{
    std::ostringstream out;
    out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
    for (const auto& clause : formula.clauses) {
        for (const auto& lit : clause)
            out << (lit.positive ? lit.var : -lit.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool literal_value(const Literal& lit, const Assignment& a) { return a[lit.var] == lit.positive; }

std::optional<int> first_violated_clause(const Nae3SatFormula& formula, const Assignment& a)
{
    if (static_cast<int>(a.values.size()) != formula.num_vars)
        throw ValidationError("assignment covers " + std::to_string(a.values.size()) + " variables, formula has "
            + std::to_string(formula.num_vars));
    for (int i = 0; i < static_cast<int>(formula.clauses.size()); ++i) {
        const auto& c = formula.clauses[i];
        bool first = literal_value(c[0], a);
        if (literal_value(c[1], a) == first && literal_value(c[2], a) == first)
            return i;
    }
    return std::nullopt;
}

bool check_nae(const Nae3SatFormula& formula, const Assignment& a)
{
    return !first_violated_clause(formula, a).has_value();
}

namespace {
    // Variable v is bit (n - v) of the mask, so ascending masks are lexicographic order.
    struct PackedClause {
        std::uint64_t bit[3];
        bool positive[3];
    };

    bool satisfies(const std::vector<PackedClause>& clauses, std::uint64_t mask)
    {
        for (const auto& c : clauses) {
            bool v0 = ((mask & c.bit[0]) != 0) == c.positive[0];
            bool v1 = ((mask & c.bit[1]) != 0) == c.positive[1];
            bool v2 = ((mask & c.bit[2]) != 0) == c.positive[2];
            if (v0 == v1 && v1 == v2)
                return false;
        }
        return true;
    }
}

std::optional<Assignment> solve_nae_bruteforce(const Nae3SatFormula& formula, Exec exec)
{
    const int n = formula.num_vars;
    if (n > max_bruteforce_vars)
        throw CapacityError("brute-force NAE solving is limited to " + std::to_string(max_bruteforce_vars)
            + " variables, formula has " + std::to_string(n));

    std::vector<PackedClause> clauses;
    for (const auto& c : formula.clauses) {
        PackedClause p{};
        for (int i = 0; i < 3; ++i) {
            p.bit[i] = std::uint64_t{1} << (n - c[i].var);
            p.positive[i] = c[i].positive;
        }
        clauses.push_back(p);
    }

    const std::int64_t total = std::int64_t{1} << n;
    constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();
    std::int64_t found = none;

    if (exec == Exec::Serial) {
        for (std::int64_t m = 0; m < total; ++m)
            if (satisfies(clauses, static_cast<std::uint64_t>(m))) {
                found = m;
                break;
            }
    }
    else {
        // Blocks are scanned in order so the first block with a witness ends the search.
        const std::int64_t block = std::int64_t{1} << 16;
        for (std::int64_t start = 0; start < total && found == none; start += block) {
            const std::int64_t end = std::min(total, start + block);
            std::int64_t best = none;
#pragma omp parallel for reduction(min : best) num_threads(worker_count()) schedule(static)
            for (std::int64_t m = start; m < end; ++m)
                if (m < best && satisfies(clauses, static_cast<std::uint64_t>(m)))
                    best = m;
            found = best;
        }
    }

    if (found == none)
        return std::nullopt;
    Assignment a;
    a.values.resize(n);
    for (int v = 1; v <= n; ++v)
        a.values[v - 1] = (found >> (n - v)) & 1;
    return a;
}

std::string format_assignment(const Assignment& a)
{
    std::ostringstream out;
    out << 'v';
    for (int v = 1; v <= static_cast<int>(a.values.size()); ++v)
        out << ' ' << (a[v] ? v : -v);
    out << " 0\n";
    return out.str();
}

Assignment parse_assignment(const std::string& text, int num_vars)
{
    Assignment a;
    a.values.assign(num_vars, false);
    std::vector<bool> seen(num_vars, false);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool terminated = false;
    while (std::getline(in, line) && !terminated) {
        ++line_no;
        auto tokens = tokens_of(line);
        if (tokens.empty() || tokens[0] != "v")
            continue;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            long lit = parse_int(tokens[i], line_no);
            if (lit == 0) {
                terminated = true;
                break;
            }
            long var = lit < 0 ? -lit : lit;
            if (var > num_vars)
                throw ParseError(line_no, "variable " + std::to_string(var) + " out of range");
            a.values[var - 1] = lit > 0;
            seen[var - 1] = true;
        }
    }
    for (int v = 0; v < num_vars; ++v)
        if (!seen[v])
            throw ValidationError("assignment omits variable " + std::to_string(v + 1));
    return a;
}

} // namespace l21
