#pragma once

#include <l21/nae.hh>
#include <l21/serialization.hh>

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

namespace corpus {

struct Entry {
    std::string name;
    std::string path;
    l21::Nae3SatFormula formula;
};

/// The .cnf files of the test corpus, by file name.
inline std::vector<Entry> load()
{
    std::vector<Entry> out;
    for (const auto& f : std::filesystem::directory_iterator(L21_CORPUS_DIR))
        if (f.path().extension() == ".cnf")
            out.push_back({f.path().stem().string(), f.path().string(),
                l21::parse_formula(l21::read_file(f.path().string()))});
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
    return out;
}

inline std::string path_of(const std::string& name) { return std::string(L21_CORPUS_DIR) + "/" + name + ".cnf"; }

} // namespace corpus
