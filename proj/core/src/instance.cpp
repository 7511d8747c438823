#include "mlapd/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mlapd {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based start column
};

// splits a line into whitespace-separated tokens, dropping '#' comments
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

Rat parse_number(const Token& tok, int line) {
    try {
        return parse_rational(tok.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, tok.column);
    }
}

std::uint32_t parse_uint(const Token& tok, int line, const char* what) {
    for (char c : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line,
                             tok.column);
    }
    if (tok.text.empty() || tok.text.size() > 9)
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line,
                         tok.column);
    return static_cast<std::uint32_t>(std::stoul(tok.text));
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_tokens = [&](std::vector<Token>& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            out = tokenize(line);
            if (!out.empty()) return true;
        }
        return false;
    };

    std::vector<Token> toks;
    if (!next_tokens(toks)) throw ParseError("empty input, expected 'tree <n>'", lineno + 1, 1);
    if (toks[0].text != "tree" || toks.size() != 2)
        throw ParseError("expected header 'tree <n>'", lineno, toks[0].column);
    std::uint32_t n = parse_uint(toks[1], lineno, "vertex count");
    if (n == 0) throw ParseError("tree must have at least one vertex", lineno, toks[1].column);

    std::vector<VertexSpec> specs;
    specs.reserve(n);
    std::set<VertexId> seen_vertices;
    std::vector<std::pair<int, int>> parent_pos;  // (line, column) per vertex line
    for (std::uint32_t k = 0; k < n; ++k) {
        if (!next_tokens(toks))
            throw ParseError("unexpected end of input, expected vertex line", lineno + 1, 1);
        if (toks[0].text != "v" || toks.size() != 4)
            throw ParseError("expected 'v <id> <parent-id|-> <cost>'", lineno, toks[0].column);
        VertexSpec spec;
        spec.id = parse_uint(toks[1], lineno, "vertex id");
        if (!seen_vertices.insert(spec.id).second)
            throw ParseError("duplicate vertex id " + toks[1].text, lineno, toks[1].column);
        if (toks[2].text != "-") spec.parent = parse_uint(toks[2], lineno, "parent id");
        spec.cost = parse_number(toks[3], lineno);
        if (spec.cost < 0) throw ParseError("negative cost", lineno, toks[3].column);
        parent_pos.emplace_back(lineno, toks[2].column);
        specs.push_back(std::move(spec));
    }
    for (std::size_t k = 0; k < specs.size(); ++k) {
        if (specs[k].parent && !seen_vertices.count(*specs[k].parent))
            throw ParseError("unknown parent id " + std::to_string(*specs[k].parent),
                             parent_pos[k].first, parent_pos[k].second);
    }

    std::vector<Request> requests;
    std::set<RequestId> seen_requests;
    while (next_tokens(toks)) {
        if (toks[0].text != "r" || toks.size() != 5)
            throw ParseError("expected 'r <id> <vertex-id> <arrival> <deadline>'", lineno,
                             toks[0].column);
        Request req;
        req.id = parse_uint(toks[1], lineno, "request id");
        if (!seen_requests.insert(req.id).second)
            throw ParseError("duplicate request id " + toks[1].text, lineno, toks[1].column);
        req.vertex = parse_uint(toks[2], lineno, "vertex id");
        if (!seen_vertices.count(req.vertex))
            throw ParseError("request on unknown vertex " + toks[2].text, lineno, toks[2].column);
        req.arrival = parse_number(toks[3], lineno);
        req.deadline = parse_number(toks[4], lineno);
        if (req.arrival < 0) throw ParseError("negative arrival time", lineno, toks[3].column);
        if (req.arrival > req.deadline)
            throw ParseError("arrival after deadline for request " + toks[1].text, lineno,
                             toks[3].column);
        requests.push_back(std::move(req));
    }

    try {
        return Instance{RootedTree(std::move(specs)), std::move(requests)};
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    const auto& tree = instance.tree;
    out << "tree " << tree.size() << "\n";
    for (std::uint32_t i = 0; i < tree.size(); ++i) {
        out << "v " << tree.id_at(i) << ' ';
        if (auto p = tree.parent(i))
            out << tree.id_at(*p);
        else
            out << '-';
        out << ' ' << format_rational(tree.cost(i)) << "\n";
    }
    for (const auto& req : instance.requests) {
        out << "r " << req.id << ' ' << req.vertex << ' ' << format_rational(req.arrival) << ' '
            << format_rational(req.deadline) << "\n";
    }
    return out.str();
}

}  // namespace mlapd
