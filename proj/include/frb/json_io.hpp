#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "frb/averaging.hpp"
#include "frb/verify.hpp"
#include "json.hpp"

namespace frb {

inline nlohmann::json quadext_json(const QuadExt& x) {
    return nlohmann::json{{"a", x.a.get_str()},
                          {"b", x.b.get_str()},
                          {"radicand", x.q},
                          {"float", x.to_double()}};
}

inline nlohmann::json step_function_json(const StepFunction& f) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const QuadExt& v = f.value_at_index(i);
        values.push_back(nlohmann::json{{"word", f.base_word(i).str()},
                                        {"a", v.a.get_str()},
                                        {"b", v.b.get_str()}});
    }
    return nlohmann::json{{"rank", f.rank()}, {"depth", f.depth()}, {"values", values}};
}

inline nlohmann::json check_json(const CheckResult& c) {
    return nlohmann::json{{"check", c.number},   {"ref", c.id},
                          {"claim", c.claim},    {"status", c.pass ? "pass" : "fail"},
                          {"exact", c.exact},    {"float", c.value},
                          {"tolerance", c.tolerance}, {"detail", c.detail},
                          {"seconds", c.seconds}};
}

// table files: one "WORD RATIONAL" pair per line, '#' starts a comment
inline VertexFunction read_table_file(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    std::map<Word, Rational> entries;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string wtext, vtext;
        if (!(row >> wtext)) continue;
        if (!(row >> vtext))
            throw std::invalid_argument("table file line " + std::to_string(lineno) +
                                        ": missing value");
        entries[Word::parse(wtext, rank)] = parse_rational(vtext);
    }
    return VertexFunction::table(std::move(entries));
}

// step files: first data line "RANK DEPTH", then "WORD RATIONAL" per line
// assigning the value on the cylinder at WORD (|WORD| = DEPTH); unlisted
// cylinders stay 0
inline StepFunction read_step_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open step file: " + path);
    std::string line;
    long lineno = 0;
    int rank = 0;
    long depth = -1;
    StepFunction f(2, 0);
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        if (depth < 0) {
            if (!(row >> rank >> depth)) {
                if (row.rdbuf()->in_avail() == 0 && line.find_first_not_of(" \t\r") ==
                                                        std::string::npos)
                    continue;
                throw std::invalid_argument("step file line " + std::to_string(lineno) +
                                            ": expected \"rank depth\"");
            }
            f = StepFunction(rank, depth);
            continue;
        }
        std::string wtext, vtext;
        if (!(row >> wtext)) continue;
        if (!(row >> vtext))
            throw std::invalid_argument("step file line " + std::to_string(lineno) +
                                        ": missing value");
        Word w = Word::parse(wtext, rank);
        if (static_cast<long>(w.size()) != depth)
            throw std::invalid_argument("step file line " + std::to_string(lineno) +
                                        ": word depth mismatch");
        f.value_at_index(sphere_index(rank, w)) = QuadExt(parse_rational(vtext));
    }
    if (depth < 0) throw std::invalid_argument("step file has no header line: " + path);
    return f;
}

}  // namespace frb
