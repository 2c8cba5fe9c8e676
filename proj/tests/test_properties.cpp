#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/engine.hpp"

using namespace ramsey;

namespace {

using Snapshot = std::map<Params, Bounds>;

Snapshot snapshot(const KnowledgeBase& kb)
{
    Snapshot out;
    for (const auto& [p, fact] : kb.facts())
        out[p] = Bounds{fact.lower, fact.upper};
    return out;
}

KnowledgeBase random_kb(std::mt19937_64& rng)
{
    KnowledgeBase kb;
    const int facts = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < facts; ++i) {
        std::vector<int> ks(1 + rng() % 3);
        for (auto& k : ks)
            k = 2 + static_cast<int>(rng() % 5);
        const Params p(ks);
        const BigInt lo = 1 + rng() % 40;
        switch (rng() % 3) {
        case 0: kb.assert_fact(p, FactKind::lower, lo, "random"); break;
        case 1: kb.assert_fact(p, FactKind::upper, lo + rng() % 400, "random"); break;
        default: kb.assert_fact(p, FactKind::exact, lo, "random"); break;
        }
    }
    if (rng() % 4 == 0)
        kb.assume(Assumption::dc);
    return kb;
}

RuleSet random_rules(std::mt19937_64& rng)
{
    static const RuleId all[] = {RuleId::base,     RuleId::mono,  RuleId::es,   RuleId::abbott,
                                 RuleId::diagprod, RuleId::power, RuleId::two_r, RuleId::r3cf,
                                 RuleId::befs,     RuleId::dc};
    RuleSet rules;
    for (auto id : all)
        if (rng() % 3 != 0)
            rules.enabled.insert(id);
    rules.es_even = rng() % 2 == 0;
    return rules;
}

bool tighter_or_equal(const Bounds& after, const Bounds& before)
{
    if (before.lower && (!after.lower || *after.lower < *before.lower))
        return false;
    if (before.upper && (!after.upper || *after.upper > *before.upper))
        return false;
    return true;
}

struct Certified {
    EdgeColoring coloring;
    std::vector<int> targets;  // per color
};

// Adds or removes colors with target 2 so the targets match `want`.
Certified retarget(const Certified& w, const Params& want)
{
    std::vector<int> kept;
    std::vector<int> color_of(w.targets.size() + 1, 0);
    std::vector<int> targets;
    for (std::size_t c = 0; c < w.targets.size(); ++c) {
        const auto row = w.coloring.color_graph(static_cast<int>(c + 1));
        if (w.targets[c] == 2 && row.edge_count() == 0)
            continue;
        targets.push_back(w.targets[c]);
        color_of[c + 1] = static_cast<int>(targets.size());
    }
    while (targets.size() < want.colors())
        targets.push_back(2);
    std::vector<int> edges;
    for (auto e : w.coloring.upper_triangle())
        edges.push_back(color_of[e]);
    return {make_coloring(w.coloring.vertices(), static_cast<int>(targets.size()), edges), targets};
}

class Certifier {
public:
    void add(const Params& p, EdgeColoring c, std::vector<int> targets)
    {
        leaves_.emplace(p, Certified{std::move(c), std::move(targets)});
    }

    Certified build(const Derivation& d) const
    {
        const auto& p = d.params;
        switch (d.rule) {
        case RuleId::external: return leaves_.at(p);
        case RuleId::base: {
            if (d.premises.empty()) {
                const auto n = static_cast<std::size_t>(p.colors() == 1 ? p[0] - 1 : 1);
                return {make_coloring(n, static_cast<int>(p.colors()),
                                      std::vector<int>(edge_count(n), 1)),
                        p.ks()};
            }
            return retarget(build(*d.premises[0]), p);
        }
        case RuleId::abbott: {
            auto a = build(*d.premises[0]);
            auto b = build(*d.premises[1]);
            auto targets = a.targets;
            targets.insert(targets.end(), b.targets.begin(), b.targets.end());
            return {abbott_product(a.coloring, b.coloring), targets};
        }
        case RuleId::diagprod: {
            auto a = build(*d.premises.front());
            auto b = build(*d.premises.back());
            std::vector<int> targets;
            for (std::size_t i = 0; i < a.targets.size(); ++i)
                targets.push_back((a.targets[i] - 1) * (b.targets[i] - 1) + 1);
            return {diagonal_product(a.coloring, b.coloring), targets};
        }
        default: throw std::logic_error("no construction for rule");
        }
    }

private:
    std::map<Params, Certified> leaves_;
};

}  // namespace

TEST_CASE("property: closure is monotone, idempotent and order independent")
{
    std::mt19937_64 rng(31337);
    const Budget budget{4, 7};
    for (int trial = 0; trial < 100; ++trial) {
        auto kb = random_kb(rng);
        const auto rules = random_rules(rng);
        const auto before = snapshot(kb);

        derive_closure(kb, rules, budget);
        const auto once = snapshot(kb);
        for (const auto& [p, b] : before)
            CHECK(tighter_or_equal(once.at(p), b));
        for (const auto& [p, fact] : kb.facts()) {
            if (fact.lower_why)
                CHECK(recheck_tree(*fact.lower_why));
            if (fact.upper_why)
                CHECK(recheck_tree(*fact.upper_why));
            if (!kb.assumes(Assumption::dc) && fact.lower_why)
                CHECK_FALSE(uses_rule(*fact.lower_why, RuleId::dc));
            CHECK(budget.admits(p));
        }

        derive_closure(kb, rules, budget);
        CHECK(snapshot(kb) == once);

        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            // Rebuild the same seeds, then close in a shuffled order.
            KnowledgeBase fresh;
            for (const auto& [p, b] : before) {
                if (b.lower)
                    fresh.assert_fact(p, FactKind::lower, *b.lower, "random");
                if (b.upper)
                    fresh.assert_fact(p, FactKind::upper, *b.upper, "random");
            }
            if (kb.assumes(Assumption::dc))
                fresh.assume(Assumption::dc);
            ClosureOptions options;
            options.shuffle_seed = seed * 7919 + static_cast<std::uint64_t>(trial);
            derive_closure(fresh, rules, budget, options);
            CHECK(snapshot(fresh) == once);
        }
    }
}

TEST_CASE("property: product-derived lower bounds are certified by colorings")
{
    KnowledgeBase kb;
    Certifier cert;
    for (const auto& info : builtin_catalog()) {
        const auto c = builtin_witness(info.name);
        const auto p = canonicalize(info.targets);
        kb.assert_fact(p, FactKind::lower, BigInt(c.vertices() + 1), std::string(info.name));
        cert.add(p, c, info.targets);
    }
    derive_closure(kb, RuleSet::only({RuleId::base, RuleId::abbott, RuleId::diagprod}), {5, 9},
                   {{Params{5, 5}, Params{3, 3, 4}, Params{3, 3, 5}}, {}});

    int certified = 0;
    for (const auto& [p, fact] : kb.facts()) {
        if (!fact.lower_why || *fact.lower > 101)
            continue;
        const auto& d = *fact.lower_why;
        if (!uses_rule(d, RuleId::abbott) && !uses_rule(d, RuleId::diagprod))
            continue;
        const auto w = cert.build(d);
        CAPTURE(p.to_string());
        CHECK(canonicalize(w.targets) == p);
        CHECK(BigInt(w.coloring.vertices() + 1) == *fact.lower);
        CHECK(verify_witness(w.coloring, w.targets).valid);
        ++certified;
    }
    CHECK(certified >= 5);
}
