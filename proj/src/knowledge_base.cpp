#include "ramsey/engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr std::pair<RuleId, std::string_view> rule_names[] = {
    {RuleId::external, "external"}, {RuleId::base, "R-base"},     {RuleId::mono, "R-mono"},
    {RuleId::es, "R-ES"},           {RuleId::abbott, "R-abbott"}, {RuleId::diagprod, "R-diagprod"},
    {RuleId::power, "R-power"},     {RuleId::two_r, "R-2r"},      {RuleId::r3cf, "R-r3cf"},
    {RuleId::befs, "R-befs"},       {RuleId::dc, "R-dc"},
};

std::string lowercase(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

DerivationPtr external_leaf(const Params& params, BoundKind kind, const BigInt& value,
                            const std::string& source)
{
    auto d = std::make_shared<Derivation>();
    d->params = params;
    d->kind = kind;
    d->value = value;
    d->rule = RuleId::external;
    d->note = source;
    return d;
}

BigInt product_bound(const BigInt& a, const BigInt& b)
{
    return (a - 1) * (b - 1) + 1;
}

}  // namespace

std::string_view rule_name(RuleId rule)
{
    for (const auto& [id, name] : rule_names)
        if (id == rule)
            return name;
    return "?";
}

std::optional<RuleId> parse_rule_name(std::string_view name)
{
    auto wanted = lowercase(name);
    if (wanted.rfind("r-", 0) != 0)
        wanted = "r-" + wanted;
    for (const auto& [id, n] : rule_names)
        if (id != RuleId::external && lowercase(n) == wanted)
            return id;
    return std::nullopt;
}

RuleSet RuleSet::all()
{
    RuleSet rs;
    for (const auto& [id, name] : rule_names)
        if (id != RuleId::external)
            rs.enabled.insert(id);
    return rs;
}

RuleSet RuleSet::only(std::initializer_list<RuleId> rules)
{
    RuleSet rs;
    rs.enabled.insert(rules.begin(), rules.end());
    return rs;
}

bool recheck(const Derivation& d)
{
    for (const auto& p : d.premises)
        if (!p || p->kind != d.kind)
            return false;
    const auto r = static_cast<int>(d.params.colors());
    const auto premise = [&](std::size_t i) -> const BigInt& { return d.premises[i]->value; };
    switch (d.rule) {
    case RuleId::external:
        return d.premises.empty();
    case RuleId::base:
        if (d.premises.empty()) {
            if (r == 1)
                return d.value == d.params[0];
            return d.params.max_k() == 2 && d.value == 2;
        }
        return d.premises.size() == 1 && d.value == premise(0) &&
               (reduce_twos(d.params) == d.premises[0]->params ||
                reduce_twos(d.premises[0]->params) == d.params);
    case RuleId::mono:
        return d.premises.size() == 1 && d.value == premise(0);
    case RuleId::es: {
        if (d.premises.size() != static_cast<std::size_t>(r))
            return false;
        BigInt total = 2 - r;
        for (std::size_t i = 0; i < d.premises.size(); ++i)
            total += premise(i);
        if (d.even_strengthening) {
            if (r != 2 || premise(0) % 2 != 0 || premise(1) % 2 != 0)
                return false;
            total -= 1;
        }
        return d.value == total;
    }
    case RuleId::abbott:
        return d.premises.size() == 2 && d.value == product_bound(premise(0), premise(1));
    case RuleId::diagprod: {
        if (d.premises.size() != 2 || !d.params.is_diagonal())
            return false;
        const auto& a = d.premises[0]->params;
        const auto& b = d.premises[1]->params;
        if (!a.is_diagonal() || !b.is_diagonal() || a.colors() != d.params.colors() ||
            b.colors() != d.params.colors())
            return false;
        if ((a[0] - 1) * (b[0] - 1) != d.params[0] - 1)
            return false;
        return d.value == product_bound(premise(0), premise(1));
    }
    case RuleId::power:
        return d.premises.empty() && d.params.is_diagonal() &&
               d.value == boost::multiprecision::pow(BigInt(d.params[0] - 1), static_cast<unsigned>(r)) + 1;
    case RuleId::two_r:
        return d.premises.empty() && d.params == Params::diagonal(r, 3) &&
               d.value == boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(r)) + 1;
    case RuleId::r3cf:
        return d.premises.empty() && r >= 4 && d.params == Params::diagonal(r, 3) &&
               d.value == r3cf_bound(r);
    case RuleId::befs: {
        if (d.premises.size() != 1 || r != 2 || (d.params[0] != 4 && d.params[1] != 4))
            return false;
        const int t = d.params[0] == 4 ? d.params[1] : d.params[0];
        return d.value == premise(0) + 2 * t - 3;
    }
    case RuleId::dc: {
        if (d.premises.size() != 1)
            return false;
        const int shift = d.strict ? 1 : 0;
        return d.kind == BoundKind::lower ? d.value == premise(0) + shift
                                          : d.value == premise(0) - shift;
    }
    }
    return false;
}

bool recheck_tree(const Derivation& d)
{
    if (!recheck(d))
        return false;
    return std::all_of(d.premises.begin(), d.premises.end(),
                       [](const DerivationPtr& p) { return recheck_tree(*p); });
}

bool uses_rule(const Derivation& d, RuleId rule)
{
    if (d.rule == rule)
        return true;
    return std::any_of(d.premises.begin(), d.premises.end(),
                       [rule](const DerivationPtr& p) { return uses_rule(*p, rule); });
}

void KnowledgeBase::assert_fact(const Params& params, FactKind kind, const BigInt& value,
                                const std::string& source)
{
    if (value < 1)
        throw Error("assert: bound value must be at least 1");
    if (kind != FactKind::upper)
        tighten(params, BoundKind::lower, value, external_leaf(params, BoundKind::lower, value, source));
    if (kind != FactKind::lower)
        tighten(params, BoundKind::upper, value, external_leaf(params, BoundKind::upper, value, source));
}

bool KnowledgeBase::tighten(const Params& params, BoundKind kind, const BigInt& value,
                            DerivationPtr why)
{
    auto [it, inserted] = facts_.try_emplace(params);
    auto& fact = it->second;
    if (inserted)
        fact.params = params;
    auto& slot = kind == BoundKind::lower ? fact.lower : fact.upper;
    auto& slot_why = kind == BoundKind::lower ? fact.lower_why : fact.upper_why;
    bool changed = false;
    if (!slot || (kind == BoundKind::lower ? value > *slot : value < *slot)) {
        slot = value;
        slot_why = why;
        changed = true;
    } else if (value == *slot && why && slot_why && why->depth < slot_why->depth) {
        slot_why = why;
        changed = true;
    }
    if (changed && why) {
        Source src;
        src.tag = std::string(rule_name(why->rule));
        for (const auto& p : why->premises)
            src.premises.push_back(p->params);
        src.citation = why->note;
        fact.sources.push_back(std::move(src));
    }
    check_consistency(fact);
    return changed;
}

void KnowledgeBase::check_consistency(const BoundFact& fact)
{
    if (!inconsistency_ && fact.lower && fact.upper && *fact.lower > *fact.upper)
        inconsistency_ = Inconsistency{fact.params, *fact.lower, *fact.upper};
}

Bounds KnowledgeBase::best_bounds(const Params& params) const
{
    const auto* fact = find(params);
    if (!fact)
        return {};
    return {fact->lower, fact->upper};
}

const BoundFact* KnowledgeBase::find(const Params& params) const
{
    auto it = facts_.find(params);
    return it == facts_.end() ? nullptr : &it->second;
}

DerivationPtr derivation(const KnowledgeBase& kb, const Params& params, BoundKind kind)
{
    const auto* fact = kb.find(params);
    if (!fact)
        return nullptr;
    return kind == BoundKind::lower ? fact->lower_why : fact->upper_why;
}

namespace {

void render(const Derivation& d, int indent, std::size_t repeat, std::ostringstream& out)
{
    if (!recheck(d))
        throw std::logic_error("derivation of " + d.params.to_string() + " does not re-check under " +
                               std::string(rule_name(d.rule)));
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ')
        << (d.kind == BoundKind::lower ? "lower " : "upper ") << d.params.to_string()
        << (d.kind == BoundKind::lower ? " >= " : " <= ") << d.value << "  [" << rule_name(d.rule);
    if (d.rule == RuleId::external && !d.note.empty())
        out << ": " << d.note;
    if (d.strict)
        out << ", strict";
    if (d.even_strengthening)
        out << ", even";
    out << "]";
    if (repeat > 1)
        out << " (x" << repeat << ")";
    out << "\n";
    for (std::size_t i = 0; i < d.premises.size();) {
        std::size_t j = i;
        while (j < d.premises.size() && d.premises[j] == d.premises[i])
            ++j;
        render(*d.premises[i], indent + 1, j - i, out);
        i = j;
    }
}

}  // namespace

std::string render_derivation(const Derivation& d)
{
    std::ostringstream out;
    render(d, 0, 1, out);
    return out.str();
}

std::string explain(const KnowledgeBase& kb, const Params& params, BoundKind kind)
{
    auto d = derivation(kb, params, kind);
    if (!d)
        throw Error("explain: no " + std::string(kind == BoundKind::lower ? "lower" : "upper") +
                    " bound stored for " + params.to_string());
    return render_derivation(*d);
}

}  // namespace ramsey
