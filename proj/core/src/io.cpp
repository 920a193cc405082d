#include "specnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace specnet {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open for reading");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

int parse_int(const std::string& tok, const std::string& path, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) fail(path, line, "malformed integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(path, line, "malformed integer '" + tok + "'");
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error(path + ": cannot open for writing");
        out << content;
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error(path + ": write failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error(path + ": rename failed");
    }
}

AdjacencyParseResult parse_adjacency(const std::string& path, AdjacencyKind expected) {
    const std::vector<std::string> lines = read_lines(path);

    std::vector<std::vector<std::uint8_t>> matrix;
    std::vector<int> line_of_row;
    int cols = -1;
    for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
        if (blank(lines[ln])) continue;
        std::vector<std::string> tokens = split_ws(lines[ln]);
        if (cols == -1) {
            cols = static_cast<int>(tokens.size());
        } else if (static_cast<int>(tokens.size()) != cols) {
            fail(path, ln + 1, "ragged row: expected " + std::to_string(cols) + " entries, got " +
                                   std::to_string(tokens.size()));
        }
        std::vector<std::uint8_t> row(cols);
        for (int j = 0; j < cols; ++j) {
            if (tokens[j] == "0") {
                row[j] = 0;
            } else if (tokens[j] == "1") {
                row[j] = 1;
            } else {
                fail(path, ln + 1, "non-binary entry '" + tokens[j] + "'");
            }
        }
        matrix.push_back(std::move(row));
        line_of_row.push_back(ln + 1);
    }
    const int rows = static_cast<int>(matrix.size());
    if (rows == 0) throw ParseError(path + ": empty matrix");

    AdjacencyParseResult result;
    result.kind = expected;

    if (expected == AdjacencyKind::bipartite) {
        std::vector<BipartiteGraph::Incidence> incidences;
        for (int a = 0; a < rows; ++a) {
            for (int p = 0; p < cols; ++p) {
                if (matrix[a][p]) incidences.emplace_back(a, p);
            }
        }
        try {
            result.bipartite.emplace(rows, cols, incidences);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ": " + e.what());
        }
        return result;
    }

    if (rows != cols) {
        throw ParseError(path + ": square matrix expected, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    }
    const bool undirected = expected == AdjacencyKind::square_undirected;
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < rows; ++i) {
        if (matrix[i][i]) {
            ++result.zeroed_diagonal;
            matrix[i][i] = 0;
        }
        for (int j = 0; j < cols; ++j) {
            if (undirected && j > i && matrix[i][j] != matrix[j][i]) {
                fail(path, line_of_row[i],
                     "asymmetric entry at (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") in undirected matrix");
            }
            if (matrix[i][j] && (!undirected || i < j)) edges.emplace_back(i, j);
        }
    }
    result.graph.emplace(rows, !undirected, edges);
    return result;
}

Graph parse_edge_list(const std::string& path, bool directed) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<Graph::Edge> edges;
    int declared_n = -1;
    int max_node = -1;
    for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
        const std::string& line = lines[ln];
        if (blank(line)) continue;
        if (line[0] == '#') {
            auto pos = line.find("n=");
            if (pos != std::string::npos) {
                std::vector<std::string> toks = split_ws(line.substr(pos + 2));
                if (!toks.empty()) declared_n = parse_int(toks[0], path, ln + 1);
            }
            continue;
        }
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() != 2) fail(path, ln + 1, "expected 'src dst'");
        int src = parse_int(tokens[0], path, ln + 1);
        int dst = parse_int(tokens[1], path, ln + 1);
        if (src < 0 || dst < 0) fail(path, ln + 1, "negative node index");
        edges.emplace_back(src, dst);
        max_node = std::max({max_node, src, dst});
    }
    int n = declared_n >= 0 ? declared_n : max_node + 1;
    if (max_node >= n) {
        throw ParseError(path + ": node " + std::to_string(max_node) +
                         " exceeds declared count n=" + std::to_string(n));
    }
    try {
        return Graph(n, directed, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::string out = "# n=" + std::to_string(g.node_count()) + "\n";
    for (const auto& [i, j] : g.edges()) {
        out += std::to_string(i);
        out += '\t';
        out += std::to_string(j);
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<std::string> parse_name_list(const std::string& path) {
    std::vector<std::string> names = read_lines(path);
    while (!names.empty() && blank(names.back())) names.pop_back();
    return names;
}

std::pair<std::vector<std::string>, std::vector<int>> parse_labels_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<std::string> ids;
    std::vector<int> labels;
    bool header_seen = false;
    for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
        if (blank(lines[ln])) continue;
        auto comma = lines[ln].rfind(',');
        if (comma == std::string::npos) fail(path, ln + 1, "expected 'node_id,community'");
        std::string id = lines[ln].substr(0, comma);
        std::string value = lines[ln].substr(comma + 1);
        if (!header_seen) {
            header_seen = true;
            if (value == "community") continue;  // header row
        }
        ids.push_back(id);
        labels.push_back(parse_int(value, path, ln + 1));
    }
    if (ids.empty()) throw ParseError(path + ": no label rows");
    return {std::move(ids), std::move(labels)};
}

namespace {

std::string id_or_index(const std::vector<std::string>& ids, std::size_t i) {
    return ids.empty() ? std::to_string(i) : ids[i];
}

}  // namespace

void emit_labels(const PartitionLabels& p, const std::vector<std::string>& ids,
                 const std::string& path) {
    if (!ids.empty() && ids.size() != p.labels.size()) {
        throw std::invalid_argument("emit_labels: ids do not match the label vector");
    }
    std::string out = "node_id,community\n";
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        out += id_or_index(ids, i) + "," + std::to_string(p.labels[i]) + "\n";
    }
    write_file_atomic(path, out);
}

void emit_scores(const std::vector<double>& scores, const std::vector<std::string>& ids,
                 const std::string& path) {
    if (!ids.empty() && ids.size() != scores.size()) {
        throw std::invalid_argument("emit_scores: ids do not match the score vector");
    }
    std::string out = "node_id,score\n";
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out += id_or_index(ids, i) + "," + format_number(scores[i]) + "\n";
    }
    write_file_atomic(path, out);
}

void emit_curve(const std::vector<std::pair<double, double>>& points, const std::string& header,
                const std::string& path) {
    std::string out = header + "\n";
    for (const auto& [x, y] : points) {
        out += format_number(x) + "," + format_number(y) + "\n";
    }
    write_file_atomic(path, out);
}

void emit_curve(const std::vector<std::pair<int, double>>& points, const std::string& header,
                const std::string& path) {
    std::string out = header + "\n";
    for (const auto& [x, y] : points) {
        out += std::to_string(x) + "," + format_number(y) + "\n";
    }
    write_file_atomic(path, out);
}

void emit_scree(const std::vector<double>& values, const std::string& path) {
    std::string out = "rank,value,abs_value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(i + 1) + "," + format_number(values[i]) + "," +
               format_number(std::abs(values[i])) + "\n";
    }
    write_file_atomic(path, out);
}

void emit_dot(const Graph& g, const PartitionLabels* labels, int degree_floor,
              const std::string& path) {
    if (labels && static_cast<int>(labels->labels.size()) != g.node_count()) {
        throw std::invalid_argument("emit_dot: labels do not match the graph");
    }
    const char* arrow = g.directed() ? " -> " : " -- ";
    std::string out = g.directed() ? "digraph g {\n" : "graph g {\n";
    out += "  node [style=filled];\n";
    for (int v = 0; v < g.node_count(); ++v) {
        int d = g.directed() ? g.out_degree(v) + g.in_degree(v) : g.degree(v);
        std::string name;
        if (d >= degree_floor) {
            name = g.names().empty() ? std::to_string(v) : g.names()[v];
        }
        std::string color =
            labels ? "/set312/" + std::to_string(labels->labels[v] % 12 + 1) : "white";
        out += "  " + std::to_string(v) + " [label=\"" + name + "\", fillcolor=\"" + color +
               "\"];\n";
    }
    for (const auto& [i, j] : g.edges()) {
        out += "  " + std::to_string(i) + arrow + std::to_string(j) + ";\n";
    }
    out += "}\n";
    write_file_atomic(path, out);
}

void emit_productivity(const ProductivityStats& stats, const std::string& path) {
    std::string out = "year,papers,authors,papers_per_author\n";
    for (const auto& row : stats.by_year) {
        out += std::to_string(row.year) + "," + std::to_string(row.papers) + "," +
               std::to_string(row.authors) + "," + format_number(row.papers_per_author) + "\n";
    }
    write_file_atomic(path, out);
}

BiblioRecord parse_biblio(const std::string& papers_path, const std::string& citations_path,
                          const std::vector<std::string>& author_names) {
    std::map<std::string, int> author_index;
    for (std::size_t i = 0; i < author_names.size(); ++i) {
        author_index[author_names[i]] = static_cast<int>(i);
    }

    BiblioRecord record;
    std::map<std::string, int> paper_index;
    int max_author = -1;
    {
        const std::vector<std::string> lines = read_lines(papers_path);
        for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
            const std::string& line = lines[ln];
            if (blank(line) || line[0] == '#') continue;
            std::istringstream ss(line);
            std::string id, year_tok, authors_tok;
            if (!std::getline(ss, id, '\t') || !std::getline(ss, year_tok, '\t') ||
                !std::getline(ss, authors_tok)) {
                fail(papers_path, ln + 1, "expected 'paper_id<TAB>year<TAB>authors'");
            }
            BiblioRecord::Paper paper;
            paper.id = id;
            paper.year = parse_int(year_tok, papers_path, ln + 1);
            std::istringstream alist(authors_tok);
            std::string tok;
            while (std::getline(alist, tok, ',')) {
                if (tok.empty()) continue;
                int a;
                if (auto it = author_index.find(tok); it != author_index.end()) {
                    a = it->second;
                } else {
                    a = parse_int(tok, papers_path, ln + 1);
                }
                if (std::find(paper.authors.begin(), paper.authors.end(), a) ==
                    paper.authors.end()) {
                    paper.authors.push_back(a);
                }
                max_author = std::max(max_author, a);
            }
            if (paper.authors.empty()) fail(papers_path, ln + 1, "paper has no authors");
            if (paper_index.count(paper.id)) {
                fail(papers_path, ln + 1, "duplicate paper id '" + paper.id + "'");
            }
            paper_index[paper.id] = static_cast<int>(record.papers.size());
            record.papers.push_back(std::move(paper));
        }
    }
    record.author_count = author_names.empty() ? max_author + 1
                                               : static_cast<int>(author_names.size());

    {
        const std::vector<std::string> lines = read_lines(citations_path);
        for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
            const std::string& line = lines[ln];
            if (blank(line) || line[0] == '#') continue;
            std::vector<std::string> tokens = split_ws(line);
            if (tokens.size() != 2) fail(citations_path, ln + 1, "expected 'citing cited'");
            auto from = paper_index.find(tokens[0]);
            auto to = paper_index.find(tokens[1]);
            if (from == paper_index.end() || to == paper_index.end()) {
                fail(citations_path, ln + 1, "citation references an unknown paper id");
            }
            record.citations.emplace_back(from->second, to->second);
        }
    }

    try {
        validate(record);
    } catch (const std::invalid_argument& e) {
        throw ParseError(papers_path + ": " + e.what());
    }
    return record;
}

}  // namespace specnet
