#include "ramsey/formats.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ramsey {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
        if (pos >= s.size())
            break;
        auto end = pos;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t')
            ++end;
        out.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

long long parse_int(std::string_view token, std::size_t line, const std::string& what)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        throw ParseError(line, what + ": expected an integer, got '" + std::string(token) + "'");
    return value;
}

// Parses "key=<int>".
long long parse_assignment(std::string_view token, std::string_view key, std::size_t line)
{
    if (token.substr(0, key.size() + 1) != std::string(key) + "=")
        throw ParseError(line, "expected '" + std::string(key) + "=<int>', got '" + std::string(token) + "'");
    return parse_int(token.substr(key.size() + 1), line, std::string(key));
}

std::vector<int> parse_int_list(std::string_view rest, std::size_t line, const std::string& what)
{
    std::vector<int> out;
    for (auto tok : split_ws(rest))
        out.push_back(static_cast<int>(parse_int(tok, line, what)));
    return out;
}

void expect_no_trailing(const std::vector<std::string_view>& lines, std::size_t from)
{
    for (std::size_t i = from; i < lines.size(); ++i)
        if (!trim(lines[i]).empty())
            throw ParseError(i + 1, "unexpected trailing content");
}

std::string join(const std::vector<int>& xs)
{
    std::string out;
    for (auto x : xs)
        out += " " + std::to_string(x);
    return out;
}

}  // namespace

std::vector<FactLine> parse_facts(std::string_view text)
{
    std::vector<FactLine> out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto lineno = i + 1;
        const auto line = trim(lines[i]);
        if (line.empty() || line.front() == '#')
            continue;
        if (line.substr(0, 2) != "R(")
            throw ParseError(lineno, "expected 'R(' at start of fact");
        const auto close = line.find(')');
        if (close == std::string_view::npos)
            throw ParseError(lineno, "missing ')'");
        FactLine fact;
        try {
            fact.params = parse_params_list(std::string(line.substr(2, close - 2)));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        auto rest = trim(line.substr(close + 1));
        if (rest.substr(0, 2) == ">=") {
            fact.kind = FactKind::lower;
            rest = rest.substr(2);
        } else if (rest.substr(0, 2) == "<=") {
            fact.kind = FactKind::upper;
            rest = rest.substr(2);
        } else if (rest.substr(0, 1) == "=") {
            fact.kind = FactKind::exact;
            rest = rest.substr(1);
        } else {
            throw ParseError(lineno, "expected '>=', '<=' or '='");
        }
        rest = trim(rest);
        std::size_t digits = 0;
        while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9')
            ++digits;
        if (digits == 0)
            throw ParseError(lineno, "expected a bound value");
        fact.value = BigInt(std::string(rest.substr(0, digits)));
        if (fact.value < 1)
            throw ParseError(lineno, "bound value must be at least 1");
        rest = trim(rest.substr(digits));
        if (!rest.empty()) {
            if (rest.substr(0, 5) != "src=\"" || rest.back() != '"' || rest.size() < 6)
                throw ParseError(lineno, "expected src=\"...\" after the value");
            fact.source = std::string(rest.substr(5, rest.size() - 6));
            if (fact.source.find('"') != std::string::npos)
                throw ParseError(lineno, "source text may not contain '\"'");
        }
        out.push_back(std::move(fact));
    }
    return out;
}

std::vector<std::string> parse_annotations(std::string_view text)
{
    constexpr std::string_view tag = "# note:";
    std::vector<std::string> out;
    for (auto line : split_lines(text)) {
        line = trim(line);
        if (line.substr(0, tag.size()) == tag)
            out.emplace_back(trim(line.substr(tag.size())));
    }
    return out;
}

std::string format_fact(const FactLine& fact)
{
    std::ostringstream out;
    out << fact.params.to_string() << ' '
        << (fact.kind == FactKind::lower ? ">=" : fact.kind == FactKind::upper ? "<=" : "=") << ' '
        << fact.value;
    if (!fact.source.empty())
        out << " src=\"" << fact.source << '"';
    return out.str();
}

std::string export_facts(const std::vector<FactLine>& facts)
{
    std::string out;
    for (const auto& f : facts)
        out += format_fact(f) + "\n";
    return out;
}

void ingest(KnowledgeBase& kb, const std::vector<FactLine>& facts)
{
    for (const auto& f : facts)
        kb.assert_fact(f.params, f.kind, f.value, f.source);
}

std::string export_kb(const KnowledgeBase& kb)
{
    const auto source_of = [](const DerivationPtr& d) {
        if (!d)
            return std::string();
        if (d->rule == RuleId::external)
            return d->note;
        return "derived:" + std::string(rule_name(d->rule));
    };
    std::string out;
    for (const auto& [params, fact] : kb.facts()) {
        if (fact.lower && fact.upper && *fact.lower == *fact.upper &&
            source_of(fact.lower_why) == source_of(fact.upper_why)) {
            out += format_fact({params, FactKind::exact, *fact.lower, source_of(fact.lower_why)}) + "\n";
            continue;
        }
        if (fact.lower)
            out += format_fact({params, FactKind::lower, *fact.lower, source_of(fact.lower_why)}) + "\n";
        if (fact.upper)
            out += format_fact({params, FactKind::upper, *fact.upper, source_of(fact.upper_why)}) + "\n";
    }
    return out;
}

EdgeColoring parse_witness(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty witness file");
    const auto header = trim(lines[0]);
    if (header != "witness v1" && header != "cyclic v1")
        throw ParseError(1, "expected 'witness v1' or 'cyclic v1'");
    if (lines.size() < 2)
        throw ParseError(2, "missing size line");
    const auto sizes = split_ws(trim(lines[1]));
    if (sizes.size() != 2)
        throw ParseError(2, "expected two assignments");

    if (header == "cyclic v1") {
        const auto m = parse_assignment(sizes[0], "m", 2);
        const auto r = parse_assignment(sizes[1], "r", 2);
        if (m < 1 || r < 1)
            throw ParseError(2, "m and r must be positive");
        std::vector<std::vector<int>> classes;
        for (long long c = 1; c <= r; ++c) {
            const auto lineno = static_cast<std::size_t>(c) + 2;
            if (lineno > lines.size())
                throw ParseError(lineno, "missing class " + std::to_string(c));
            const auto line = trim(lines[lineno - 1]);
            const auto prefix = "class " + std::to_string(c) + ":";
            if (line.substr(0, prefix.size()) != prefix)
                throw ParseError(lineno, "expected '" + prefix + "'");
            classes.push_back(parse_int_list(line.substr(prefix.size()), lineno, "class"));
        }
        expect_no_trailing(lines, static_cast<std::size_t>(r) + 2);
        try {
            return cyclic_coloring(static_cast<std::size_t>(m), classes);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(2, e.what());
        }
    }

    const auto n = parse_assignment(sizes[0], "n", 2);
    const auto r = parse_assignment(sizes[1], "r", 2);
    if (n < 1 || r < 1)
        throw ParseError(2, "n and r must be positive");
    std::vector<int> colors;
    colors.reserve(edge_count(static_cast<std::size_t>(n)));
    for (long long row = 0; row + 1 < n; ++row) {
        const auto lineno = static_cast<std::size_t>(row) + 3;
        if (lineno > lines.size())
            throw ParseError(lineno, "missing row " + std::to_string(row));
        const auto values = parse_int_list(lines[lineno - 1], lineno, "row " + std::to_string(row));
        const auto expected = static_cast<std::size_t>(n - 1 - row);
        if (values.size() != expected)
            throw ParseError(lineno, "row " + std::to_string(row) + ": expected " +
                                         std::to_string(expected) + " colors, got " +
                                         std::to_string(values.size()));
        for (int c : values)
            if (c < 1 || c > r)
                throw ParseError(lineno, "row " + std::to_string(row) + ": color " + std::to_string(c) +
                                             " outside 1.." + std::to_string(r));
        colors.insert(colors.end(), values.begin(), values.end());
    }
    expect_no_trailing(lines, static_cast<std::size_t>(n) + 1);
    return make_coloring(static_cast<std::size_t>(n), static_cast<int>(r), colors);
}

std::string export_witness(const EdgeColoring& c)
{
    std::ostringstream out;
    out << "witness v1\n" << "n=" << c.vertices() << " r=" << c.colors() << "\n";
    for (std::size_t i = 0; i + 1 < c.vertices(); ++i) {
        for (std::size_t j = i + 1; j < c.vertices(); ++j)
            out << (j == i + 1 ? "" : " ") << c.color(i, j);
        out << "\n";
    }
    return out.str();
}

std::string export_cyclic(std::size_t m, const std::vector<std::vector<int>>& classes)
{
    std::ostringstream out;
    out << "cyclic v1\n" << "m=" << m << " r=" << classes.size() << "\n";
    for (std::size_t c = 0; c < classes.size(); ++c)
        out << "class " << c + 1 << ":" << join(classes[c]) << "\n";
    return out.str();
}

SumFreePartition parse_partition(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]) != "partition v1")
        throw ParseError(1, "expected 'partition v1'");
    if (lines.size() < 2)
        throw ParseError(2, "missing size line");
    const auto fields = split_ws(trim(lines[1]));
    if (fields.size() != 3)
        throw ParseError(2, "expected 'n=<int> r=<int> mode=<linear|cyclic>'");
    SumFreePartition p;
    p.n = static_cast<int>(parse_assignment(fields[0], "n", 2));
    const auto r = parse_assignment(fields[1], "r", 2);
    if (fields[2] == "mode=linear")
        p.mode = PartitionMode::linear;
    else if (fields[2] == "mode=cyclic")
        p.mode = PartitionMode::cyclic;
    else
        throw ParseError(2, "mode must be linear or cyclic");
    if (p.n < 1 || r < 1)
        throw ParseError(2, "n and r must be positive");
    for (long long i = 0; i < r; ++i) {
        const auto lineno = static_cast<std::size_t>(i) + 3;
        if (lineno > lines.size())
            throw ParseError(lineno, "missing part " + std::to_string(i + 1));
        const auto line = trim(lines[lineno - 1]);
        if (line.substr(0, 5) != "part:")
            throw ParseError(lineno, "expected 'part:'");
        p.parts.push_back(parse_int_list(line.substr(5), lineno, "part"));
    }
    expect_no_trailing(lines, static_cast<std::size_t>(r) + 2);
    return p;
}

std::string export_partition(const SumFreePartition& p)
{
    std::ostringstream out;
    out << "partition v1\n"
        << "n=" << p.n << " r=" << p.parts.size()
        << " mode=" << (p.mode == PartitionMode::linear ? "linear" : "cyclic") << "\n";
    for (const auto& part : p.parts)
        out << "part:" << join(part) << "\n";
    return out.str();
}

Graph parse_graph_literal(const std::string& literal)
{
    const auto fail = [&](const std::string& why) {
        return Error("graph literal '" + literal + "': " + why);
    };
    const auto to_size = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw fail("expected a non-negative integer, got '" + std::string(s) + "'");
        return v;
    };
    const std::string_view lit(literal);
    if (lit.substr(0, 9) == "complete:")
        return complete_graph(to_size(lit.substr(9)));
    if (lit.substr(0, 7) == "cyclic:") {
        const auto rest = lit.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw fail("expected cyclic:<m>:<d1,d2,...>");
        const auto m = to_size(rest.substr(0, colon));
        std::vector<std::size_t> diffs;
        auto list = rest.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= list.size() && !list.empty()) {
            auto comma = list.find(',', pos);
            if (comma == std::string_view::npos)
                comma = list.size();
            diffs.push_back(to_size(list.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return circulant_graph(m, diffs);
    }
    throw fail("expected 'cyclic:' or 'complete:'");
}

std::vector<DcPair> parse_pairs(std::string_view text)
{
    std::vector<DcPair> out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        if (line.empty() || line.front() == '#')
            continue;
        const auto fields = split_ws(line);
        if (fields.size() != 2)
            throw ParseError(i + 1, "expected '<moved params> <original params>'");
        DcPair pair;
        try {
            pair.moved = parse_params_list(std::string(fields[0]));
            pair.original = parse_params_list(std::string(fields[1]));
        } catch (const Error& e) {
            throw ParseError(i + 1, e.what());
        }
        if (!is_dc_adjacent(pair.moved, pair.original))
            throw ParseError(i + 1, pair.moved.to_list() + " is not DC-adjacent to " +
                                        pair.original.to_list());
        out.push_back(std::move(pair));
    }
    return out;
}

std::string render_table_r3(const KnowledgeBase& kb, int r_max)
{
    if (r_max < 2)
        throw Error("table: max r must be at least 2");
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"r", "lower", "upper"});
    for (int r = 2; r <= r_max; ++r) {
        const auto b = kb.best_bounds(Params::diagonal(r, 3));
        rows.push_back({std::to_string(r), b.lower ? b.lower->str() : "?",
                        b.upper ? b.upper->str() : "?"});
    }
    std::size_t w0 = 0;
    std::size_t w = 0;
    for (const auto& row : rows) {
        w0 = std::max(w0, row[0].size());
        w = std::max({w, row[1].size(), row[2].size()});
    }
    std::ostringstream out;
    for (const auto& row : rows)
        out << std::setw(static_cast<int>(w0)) << row[0] << "  " << std::setw(static_cast<int>(w))
            << row[1] << "  " << std::setw(static_cast<int>(w)) << row[2] << "\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << contents;
    if (!out)
        throw Error("write to '" + path + "' failed");
}

}  // namespace ramsey
