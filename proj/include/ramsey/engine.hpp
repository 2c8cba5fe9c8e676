#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/params.hpp"

namespace ramsey {

enum class BoundKind { lower, upper };
enum class FactKind { lower, upper, exact };

enum class RuleId {
    external,
    base,      // R(k) = k; R(2, rest) = R(rest)
    mono,      // nondecreasing in each k_i
    es,        // R <= 2 - r + sum_i R(.., k_i - 1, ..)
    abbott,    // R(A u B) >= (R(A)-1)(R(B)-1) + 1
    diagprod,  // R_r(st+1) >= (R_r(s+1)-1)(R_r(t+1)-1) + 1
    power,     // R_r(k) >= (k-1)^r + 1
    two_r,     // R_r(3) >= 2^r + 1
    r3cf,      // R_r(3) <= floor((e - 1/6) r!) + 1, r >= 4
    befs,      // R(4,t) >= R(3,t) + 2t - 3
    dc,        // diagonal conjecture, only under the DC assumption
};

std::string_view rule_name(RuleId rule);
/// Accepts "R-ES", "es", "r-es", ... Returns nullopt for unknown names.
std::optional<RuleId> parse_rule_name(std::string_view name);

struct RuleSet {
    std::set<RuleId> enabled;
    /// Two-color R-ES: subtract one when both summands are even.
    bool es_even = false;

    /// Every inference rule (R-dc still needs the DC assumption to fire).
    static RuleSet all();
    static RuleSet only(std::initializer_list<RuleId> rules);

    [[nodiscard]] bool has(RuleId rule) const { return enabled.count(rule) != 0; }
};

struct Budget {
    int max_r = 10;
    int max_k = 17;

    [[nodiscard]] bool admits(const Params& p) const
    {
        return static_cast<int>(p.colors()) <= max_r && p.max_k() <= max_k;
    }
};

enum class Assumption { dc, dc_strict };

/// Immutable proof tree node. Premises are snapshots, so trees are acyclic.
struct Derivation {
    Params params;
    BoundKind kind = BoundKind::lower;
    BigInt value;
    RuleId rule = RuleId::external;
    std::vector<std::shared_ptr<const Derivation>> premises;
    int depth = 0;
    /// Citation for external leaves; empty otherwise.
    std::string note;
    /// R-dc with the strict assumption.
    bool strict = false;
    /// R-ES with the even-summand strengthening applied.
    bool even_strengthening = false;
};

using DerivationPtr = std::shared_ptr<const Derivation>;

/// Recomputes a node's value from its premises under its rule.
bool recheck(const Derivation& d);
bool recheck_tree(const Derivation& d);

struct Source {
    std::string tag;
    std::vector<Params> premises;
    std::string citation;
};

struct BoundFact {
    Params params;
    std::optional<BigInt> lower;
    std::optional<BigInt> upper;
    DerivationPtr lower_why;
    DerivationPtr upper_why;
    std::vector<Source> sources;
};

struct Bounds {
    std::optional<BigInt> lower;
    std::optional<BigInt> upper;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct Inconsistency {
    Params params;
    BigInt lower;
    BigInt upper;
};

class KnowledgeBase {
public:
    /// Bounds only ever tighten: lower takes the max, upper the min.
    /// lower > upper marks the KB inconsistent instead of throwing.
    void assert_fact(const Params& params, FactKind kind, const BigInt& value,
                     const std::string& source = {});

    /// Tightens one side with a derivation. Returns true on change.
    bool tighten(const Params& params, BoundKind kind, const BigInt& value, DerivationPtr why);

    [[nodiscard]] Bounds best_bounds(const Params& params) const;
    [[nodiscard]] const BoundFact* find(const Params& params) const;
    [[nodiscard]] const std::map<Params, BoundFact>& facts() const noexcept { return facts_; }
    [[nodiscard]] std::size_t size() const noexcept { return facts_.size(); }

    void assume(Assumption a) { assumptions_.insert(a); }
    [[nodiscard]] bool assumes(Assumption a) const { return assumptions_.count(a) != 0; }

    [[nodiscard]] bool inconsistent() const noexcept { return inconsistency_.has_value(); }
    [[nodiscard]] const std::optional<Inconsistency>& inconsistency() const noexcept
    {
        return inconsistency_;
    }

    /// Free-text notes that are never asserted as bounds.
    std::vector<std::string> annotations;

private:
    void check_consistency(const BoundFact& fact);

    std::map<Params, BoundFact> facts_;
    std::set<Assumption> assumptions_;
    std::optional<Inconsistency> inconsistency_;
};

struct ClosureOptions {
    /// Extra params to ground the rules on.
    std::vector<Params> targets;
    /// Shuffles rule-instance evaluation order (values must not depend on it).
    std::optional<std::uint64_t> shuffle_seed;
};

struct ClosureStats {
    std::size_t universe = 0;
    std::size_t instances = 0;
    std::size_t evaluations = 0;
    std::size_t updates = 0;
    /// Candidate params dropped for exceeding max_r or max_k.
    std::size_t budget_skipped = 0;
};

/// Closes the KB under the enabled rules. Rules are grounded over the
/// params reachable from the seeds, the targets and R_r(3) (r <= max_r)
/// through the premises of the enabled rules, all within the budget.
ClosureStats derive_closure(KnowledgeBase& kb, const RuleSet& rules, const Budget& budget = {},
                            const ClosureOptions& options = {});

/// floor((e - 1/6) r!) + 1, exact.
BigInt r3cf_bound(int r);

DerivationPtr derivation(const KnowledgeBase& kb, const Params& params, BoundKind kind);

/// Indented rendering of the derivation tree. Every node is re-checked;
/// a node whose arithmetic does not reproduce its value throws.
std::string explain(const KnowledgeBase& kb, const Params& params, BoundKind kind);
std::string render_derivation(const Derivation& d);

/// Does the tree contain a node using `rule`?
bool uses_rule(const Derivation& d, RuleId rule);

enum class DcStatus { contradiction, not_followed, consistent };
std::string_view dc_status_name(DcStatus s);

/// P1 = P2 with a pair (a, b), a <= b, replaced by (a-1, b+1).
struct DcPair {
    Params moved;
    Params original;
};

bool is_dc_adjacent(const Params& moved, const Params& original);

struct DcPairReport {
    DcPair pair;
    Bounds moved;
    Bounds original;
    DcStatus status = DcStatus::consistent;
};

/// All DC-adjacent pairs with both sides present in the KB and within budget.
std::vector<DcPair> dc_adjacent_pairs(const KnowledgeBase& kb, const Budget& budget = {});

std::vector<DcPairReport> check_dc(const KnowledgeBase& kb, std::span<const DcPair> pairs);
std::vector<DcPairReport> check_dc(const KnowledgeBase& kb, const Budget& budget = {});

struct RatioRow {
    int r = 0;
    std::optional<double> lower_root;
    std::optional<double> upper_root;
};

/// Finite-r proxies (R_r(k) - 1)^(1/r).
struct RatioReport {
    int k = 0;
    std::vector<RatioRow> rows;
    std::optional<double> sup_lower;
    std::optional<int> sup_r;
};

RatioReport ratio_report(const KnowledgeBase& kb, int k, int r_max);

/// Fixed four-place decimal.
std::string format_decimal(double value, int places = 4);

/// (value)^(1/r) for big values, via logarithms.
double integer_root(const BigInt& value, int r);

}  // namespace ramsey
