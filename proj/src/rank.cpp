#include "mostar/rank.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mostar/measures.hpp"

namespace mostar {

namespace {

const std::vector<std::string> kVertexCols = {"peri", "spr", "deg", "cc", "bc", "ec", "ecc"};
const std::vector<std::string> kEdgeCols = {"edeg", "eecc", "eperi", "espr", "Mo"};

std::int64_t round_1e9(double x) { return std::llround(x * 1e9); }

}  // namespace

RankTable rank_table(const Graph& g, const std::vector<std::string>& labels, TableKind kind) {
    DistanceMatrix dm = all_pairs(g);
    if (!dm.connected()) throw DomainError("rank table requires a connected graph");
    NCounts nc = build_ncounts(dm);

    RankTable t;
    t.kind = kind;
    if (kind == TableKind::Vertex) {
        t.columns = kVertexCols;
        std::vector<std::int64_t> peri(g.n), spr(g.n);
        for (int v = 0; v < g.n; ++v) {
            peri[v] = peri_vertex(nc, v);
            spr[v] = spr_vertex(nc, v);
        }
        std::vector<int> deg(g.n);
        for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
        auto dsum = distance_sums(dm);  // cc descending == distance sum ascending
        auto bc = betweenness_exact(g);
        auto ecraw = eigenvector_centrality(g);
        std::vector<std::int64_t> ec(g.n);  // structural twins tie exactly at 1e-9
        for (int v = 0; v < g.n; ++v) ec[v] = round_1e9(ecraw[v]);
        auto ecc = eccentricities(dm);

        std::vector<std::vector<int>> cols;
        cols.push_back(competition_ranks(peri, true));
        cols.push_back(competition_ranks(spr, true));
        cols.push_back(competition_ranks(deg, false));
        cols.push_back(competition_ranks(dsum, true));
        cols.push_back(competition_ranks(bc, false));
        cols.push_back(competition_ranks(ec, false));
        cols.push_back(competition_ranks(ecc, true));

        std::vector<int> byname(g.n);
        for (int v = 0; v < g.n; ++v) byname[v] = v;
        std::sort(byname.begin(), byname.end(),
                  [&](int a, int b) { return labels[a] < labels[b]; });
        for (int v : byname) {
            t.row_labels.push_back(labels[v]);
            std::vector<int> row;
            for (auto& c : cols) row.push_back(c[v]);
            t.ranks.push_back(std::move(row));
        }
    } else {
        t.columns = kEdgeCols;
        BeatsBits bb = build_beats(nc);
        const int m = g.m();
        std::vector<int> edegs(m);
        std::vector<std::int64_t> eeccs(m), eperis(m), esprs(m), mos(m);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges[i];
            edegs[i] = edeg(g, u, v);
            eeccs[i] = eecc(dm, u, v);
            eperis[i] = eperi_edge(bb, u, v);
            esprs[i] = espr_edge(nc, u, v);
            mos[i] = mostar_edge(nc, u, v);
        }
        std::vector<std::vector<int>> cols;
        cols.push_back(competition_ranks(edegs, false));
        cols.push_back(competition_ranks(eeccs, true));
        cols.push_back(competition_ranks(eperis, true));
        cols.push_back(competition_ranks(esprs, true));
        cols.push_back(competition_ranks(mos, true));

        std::vector<std::pair<std::string, int>> labelled(m);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges[i];
            const std::string& a = labels[u];
            const std::string& b = labels[v];
            labelled[i] = {(a < b ? a + " , " + b : b + " , " + a), i};
        }
        std::sort(labelled.begin(), labelled.end());
        for (auto& [lab, i] : labelled) {
            t.row_labels.push_back(lab);
            std::vector<int> row;
            for (auto& c : cols) row.push_back(c[i]);
            t.ranks.push_back(std::move(row));
        }
    }
    return t;
}

std::vector<TableDiff> compare_tables(const RankTable& computed, const RankTable& reference) {
    if (computed.columns != reference.columns) throw DomainError("rank tables: column mismatch");
    std::map<std::string, const std::vector<int>*> ref;
    for (std::size_t i = 0; i < reference.row_labels.size(); ++i)
        ref[reference.row_labels[i]] = &reference.ranks[i];
    if (ref.size() != computed.row_labels.size())
        throw DomainError("rank tables: row set size mismatch");
    std::vector<TableDiff> diffs;
    for (std::size_t i = 0; i < computed.row_labels.size(); ++i) {
        auto it = ref.find(computed.row_labels[i]);
        if (it == ref.end())
            throw DomainError("rank tables: row \"" + computed.row_labels[i] +
                              "\" missing from reference");
        for (std::size_t c = 0; c < computed.columns.size(); ++c) {
            int got = computed.ranks[i][c];
            int want = (*it->second)[c];
            if (got != want)
                diffs.push_back({computed.row_labels[i], computed.columns[c], got, want});
        }
    }
    return diffs;
}

RankTable load_rank_table_csv(std::istream& in, TableKind kind) {
    RankTable t;
    t.kind = kind;
    std::string line;
    if (!std::getline(in, line)) throw DomainError("rank table csv: empty file");
    {
        std::stringstream ss(line);
        std::string cell;
        bool first = true;
        while (std::getline(ss, cell, ',')) {
            if (!first) t.columns.push_back(cell);
            first = false;
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string label;
        std::size_t pos = 0;
        if (line[0] == '"') {
            std::size_t end = line.find('"', 1);
            if (end == std::string::npos) throw DomainError("rank table csv: unterminated quote");
            label = line.substr(1, end - 1);
            pos = end + 2;  // skip closing quote and comma
        } else {
            std::size_t end = line.find(',');
            label = line.substr(0, end);
            pos = end + 1;
        }
        std::vector<int> row;
        std::stringstream ss(line.substr(pos));
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stoi(cell));
        if (row.size() != t.columns.size())
            throw DomainError("rank table csv: row \"" + label + "\" has wrong arity");
        t.row_labels.push_back(label);
        t.ranks.push_back(std::move(row));
    }
    return t;
}

void rank_table_to_csv(std::ostream& out, const RankTable& t) {
    out << "label";
    for (auto& c : t.columns) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        out << '"' << t.row_labels[i] << '"';
        for (int r : t.ranks[i]) out << ',' << r;
        out << '\n';
    }
}

void rank_table_to_json(std::ostream& out, const RankTable& t) {
    out << "{\n  \"kind\": \"" << (t.kind == TableKind::Vertex ? "vertex" : "edge")
        << "\",\n  \"columns\": [";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? ", " : "") << '"' << t.columns[c] << '"';
    out << "],\n  \"rows\": {";
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        out << (i ? ", " : "") << '"' << t.row_labels[i] << "\": [";
        for (std::size_t c = 0; c < t.ranks[i].size(); ++c)
            out << (c ? ", " : "") << t.ranks[i][c];
        out << ']';
    }
    out << "}\n}\n";
}

}  // namespace mostar
