#include "mostar/mechanisms.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace mostar {

namespace {

#include "mechanisms_builtin.inc"

bool valid_token(const std::string& t) {
    for (char c : t)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    return !t.empty();
}

std::vector<std::string> parse_side(const std::string& text, int line, bool allow_empty) {
    std::vector<std::string> out;
    std::string token;
    std::stringstream ss(text);
    std::vector<std::string> chunks;
    while (ss >> token) chunks.push_back(token);
    // tokens are species names separated by '+'
    bool expect_species = true;
    for (const auto& ch : chunks) {
        if (ch == "+") {
            if (expect_species) throw MechanismParseError(line, "misplaced '+'");
            expect_species = true;
            continue;
        }
        if (!expect_species) throw MechanismParseError(line, "missing '+' before \"" + ch + "\"");
        if (!valid_token(ch)) throw MechanismParseError(line, "bad species token \"" + ch + "\"");
        out.push_back(ch);
        expect_species = false;
    }
    if (expect_species && !chunks.empty())
        throw MechanismParseError(line, "dangling '+'");
    if (out.empty() && !allow_empty)
        throw MechanismParseError(line, "no reactants before \"->\"");
    return out;
}

}  // namespace

Mechanism parse_mechanism(std::istream& in) {
    Mechanism mech;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw MechanismParseError(lineno, "missing \"->\"");
        auto reactants = parse_side(line.substr(0, arrow), lineno, false);
        auto products = parse_side(line.substr(arrow + 2), lineno, true);
        for (const auto& s : reactants) names.insert(s);
        for (const auto& s : products) names.insert(s);
        mech.reactions.emplace_back(std::move(reactants), std::move(products));
    }
    mech.species.assign(names.begin(), names.end());
    return mech;
}

NamedGraph reactant_graph(const Mechanism& mech) {
    std::set<std::string> vertex_names;
    for (const auto& [reactants, products] : mech.reactions)
        for (const auto& s : reactants)
            if (s != "M") vertex_names.insert(s);
    NamedGraph ng;
    ng.names.assign(vertex_names.begin(), vertex_names.end());
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < ng.names.size(); ++i) id[ng.names[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [reactants, products] : mech.reactions) {
        std::set<int> distinct;
        for (const auto& s : reactants)
            if (s != "M") distinct.insert(id[s]);
        for (auto it = distinct.begin(); it != distinct.end(); ++it)
            for (auto jt = std::next(it); jt != distinct.end(); ++jt)
                edges.emplace_back(*it, *jt);  // A+A self-reactions add nothing
    }
    ng.graph = build_graph(static_cast<int>(ng.names.size()), edges);
    return ng;
}

namespace {

NamedGraph from_edge_names(const std::pair<const char*, const char*>* edges, std::size_t count) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        names.insert(edges[i].first);
        names.insert(edges[i].second);
    }
    NamedGraph ng;
    ng.names.assign(names.begin(), names.end());
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < ng.names.size(); ++i) id[ng.names[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < count; ++i)
        es.emplace_back(id[edges[i].first], id[edges[i].second]);
    ng.graph = build_graph(static_cast<int>(ng.names.size()), es);
    return ng;
}

}  // namespace

NamedGraph builtin_mechanism(const std::string& name) {
    if (name == "superfast")
        return from_edge_names(kSuperFastEdges, std::size(kSuperFastEdges));
    if (name == "mozart4") return from_edge_names(kMozart4Edges, std::size(kMozart4Edges));
    throw DomainError("unknown builtin mechanism \"" + name + "\" (superfast, mozart4)");
}

RankTable mechanism_rank_table(const NamedGraph& ng, TableKind kind) {
    return rank_table(ng.graph, ng.names, kind);
}

}  // namespace mostar
