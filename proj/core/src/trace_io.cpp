#include "mlapd/trace_io.hpp"

#include <sstream>

namespace mlapd {

namespace {

void print_set(std::ostream& out, const RootedTree& tree,
               const std::vector<std::uint32_t>& indices) {
    if (indices.empty()) {
        out << " -";
        return;
    }
    for (std::uint32_t v : indices) out << ' ' << tree.id_at(v);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

}  // namespace

std::string serialize_trace(const Instance& instance, const std::vector<TraceRecord>& trace) {
    const auto& tree = instance.tree;
    std::ostringstream out;
    for (const auto& rec : trace) {
        out << "transmission " << rec.index << "\n";
        out << "time " << format_rational(rec.time) << "\n";
        out << "critical " << rec.critical_request << "\n";
        out << "VE";
        print_set(out, tree, rec.expansion);
        out << "\nVI";
        print_set(out, tree, rec.investment);
        out << "\nA";
        print_set(out, tree, rec.anticipated);
        out << "\nAbar";
        print_set(out, tree, rec.unanticipated);
        out << "\ncostT " << format_rational(rec.cost_tree) << "\n";
        out << "costAbar " << format_rational(rec.cost_unanticipated) << "\n";
        for (std::uint32_t v = 0; v < tree.size(); ++v) {
            out << "v " << tree.id_at(v) << " ell " << format_rational(rec.ell_after[v])
                << " next " << format_ext(rec.next_after[v]) << " I";
            print_set(out, tree, rec.invested_after[v]);
            out << "\n";
        }
        out << "\n";
    }
    return out.str();
}

TraceDiff diff_trace_text(const std::string& expected, const std::string& actual) {
    TraceDiff diff;
    auto exp_lines = split_lines(expected);
    auto act_lines = split_lines(actual);
    std::size_t common = std::min(exp_lines.size(), act_lines.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (exp_lines[i] == act_lines[i]) continue;
        std::ostringstream msg;
        msg << "line " << i + 1 << ": expected '" << exp_lines[i] << "', got '" << act_lines[i]
            << "'";
        // name the first differing field when the line shapes match
        std::istringstream es(exp_lines[i]), as(act_lines[i]);
        std::vector<std::string> et, at;
        for (std::string tok; es >> tok;) et.push_back(tok);
        for (std::string tok; as >> tok;) at.push_back(tok);
        for (std::size_t f = 0; f < std::min(et.size(), at.size()); ++f) {
            if (et[f] != at[f]) {
                msg << " (first differing field " << f + 1 << ": '" << et[f] << "' vs '" << at[f]
                    << "')";
                break;
            }
        }
        diff.differences.push_back(msg.str());
    }
    if (exp_lines.size() != act_lines.size())
        diff.differences.push_back("expected " + std::to_string(exp_lines.size()) +
                                   " lines, got " + std::to_string(act_lines.size()));
    diff.identical = diff.differences.empty();
    return diff;
}

}  // namespace mlapd
