#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line)
    {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct FactLine {
    Params params;
    FactKind kind = FactKind::lower;
    BigInt value;
    std::string source;

    friend bool operator==(const FactLine&, const FactLine&) = default;
};

/// `R(k1,k2,...) >= v [src="text"]`, also `<=` and `=`. `#` starts a comment
/// line. Params are canonicalized; file order is kept.
std::vector<FactLine> parse_facts(std::string_view text);
/// Text of `# note:` comment lines, kept as annotations and never asserted.
std::vector<std::string> parse_annotations(std::string_view text);

std::string format_fact(const FactLine& fact);
std::string export_facts(const std::vector<FactLine>& facts);

void ingest(KnowledgeBase& kb, const std::vector<FactLine>& facts);

/// One line per stored bound (`=` when lower equals upper); the source is
/// the external citation or "derived:<rule>".
std::string export_kb(const KnowledgeBase& kb);

/// Reads both `witness v1` and `cyclic v1` files.
EdgeColoring parse_witness(std::string_view text);
std::string export_witness(const EdgeColoring& c);
std::string export_cyclic(std::size_t m, const std::vector<std::vector<int>>& classes);

SumFreePartition parse_partition(std::string_view text);
std::string export_partition(const SumFreePartition& p);

/// `cyclic:<m>:<d1,d2,...>` or `complete:<n>`.
Graph parse_graph_literal(const std::string& literal);

/// One DC pair per line: the moved params, whitespace, the original params.
std::vector<DcPair> parse_pairs(std::string_view text);

/// Columns r, lower, upper for r = 2..r_max; `?` marks an unknown bound.
std::string render_table_r3(const KnowledgeBase& kb, int r_max);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ramsey
