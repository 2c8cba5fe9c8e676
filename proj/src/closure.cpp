#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramsey/engine.hpp"

namespace ramsey {

namespace mp = boost::multiprecision;

BigInt r3cf_bound(int r)
{
    if (r < 1)
        throw Error("r3cf: color count must be positive");
    BigInt factorial = 1;
    for (int i = 2; i <= r; ++i)
        factorial *= i;

    // e lies in [sum_{j<=N} 1/j!, sum_{j<=N} 1/j! + 1/(N! N)); widen N until
    // both ends of (e - 1/6) r! share a floor.
    mp::cpp_rational partial = 1;
    BigInt j_factorial = 1;
    for (int n = 1;; ++n) {
        j_factorial *= n;
        partial += mp::cpp_rational(1, j_factorial);
        if (n < r + 2)
            continue;
        const mp::cpp_rational tail(1, j_factorial * n);
        const mp::cpp_rational sixth(1, 6);
        const mp::cpp_rational lo = (partial - sixth) * factorial;
        const mp::cpp_rational hi = (partial + tail - sixth) * factorial;
        const BigInt floor_lo = mp::numerator(lo) / mp::denominator(lo);
        const BigInt floor_hi = mp::numerator(hi) / mp::denominator(hi);
        if (floor_lo == floor_hi)
            return floor_lo + 1;
    }
}

namespace {

Params with_replaced(const Params& p, std::size_t i, int new_i, std::size_t j, int new_j)
{
    auto ks = p.ks();
    ks[i] = new_i;
    ks[j] = new_j;
    return Params(std::move(ks));
}

Params with_decremented(const Params& p, int value)
{
    auto ks = p.ks();
    *std::find(ks.begin(), ks.end(), value) -= 1;
    return Params(std::move(ks));
}

std::vector<std::pair<int, int>> value_counts(const Params& p)
{
    std::vector<std::pair<int, int>> out;
    for (int k : p.ks()) {
        if (!out.empty() && out.back().first == k)
            ++out.back().second;
        else
            out.emplace_back(k, 1);
    }
    return out;
}

std::size_t first_index(const Params& p, int value)
{
    const auto& ks = p.ks();
    return static_cast<std::size_t>(std::find(ks.begin(), ks.end(), value) - ks.begin());
}

struct Instance {
    RuleId rule = RuleId::external;
    BoundKind kind = BoundKind::lower;
    int conclusion = 0;
    std::vector<int> premises;
    std::optional<BigInt> constant;
    long offset = 0;
    bool strict = false;
    // R-dc through an R-base step: the moved params before dropping the 2.
    std::optional<Params> via;
};

Instance instance(RuleId rule, BoundKind kind, int conclusion, std::vector<int> premises = {},
                  std::optional<BigInt> constant = std::nullopt)
{
    Instance inst;
    inst.rule = rule;
    inst.kind = kind;
    inst.conclusion = conclusion;
    inst.premises = std::move(premises);
    inst.constant = std::move(constant);
    return inst;
}

class Closure {
public:
    Closure(KnowledgeBase& kb, const RuleSet& rules, const Budget& budget,
            const ClosureOptions& options)
        : kb_(kb), rules_(rules), budget_(budget), options_(options),
          base_(rules.has(RuleId::base)),
          dc_(rules.has(RuleId::dc) &&
              (kb.assumes(Assumption::dc) || kb.assumes(Assumption::dc_strict))),
          strict_(kb.assumes(Assumption::dc_strict))
    {}

    ClosureStats run()
    {
        ground();
        propagate();
        write_back();
        stats_.universe = params_.size();
        stats_.instances = instances_.size();
        return stats_;
    }

private:
    Params norm(const Params& p) const { return base_ ? reduce_twos(p) : p; }

    std::optional<int> intern(const Params& p)
    {
        if (!budget_.admits(p)) {
            ++stats_.budget_skipped;
            return std::nullopt;
        }
        auto [it, inserted] = index_.try_emplace(p, static_cast<int>(params_.size()));
        if (inserted) {
            params_.push_back(p);
            pending_.push_back(it->second);
        }
        return it->second;
    }

    void add(Instance inst) { instances_.push_back(std::move(inst)); }

    void ground()
    {
        for (const auto& [p, fact] : kb_.facts()) {
            intern(p);
            intern(norm(p));
        }
        for (const auto& t : options_.targets) {
            intern(t);
            intern(norm(t));
        }
        for (int r = 1; r <= budget_.max_r; ++r)
            intern(Params::diagonal(r, 3));
        while (!pending_.empty()) {
            const int i = pending_.front();
            pending_.pop_front();
            ground_at(i);
        }
    }

    void ground_at(int i)
    {
        const Params p = params_[static_cast<std::size_t>(i)];
        const auto r = static_cast<int>(p.colors());

        if (base_) {
            if (r == 1 || p.max_k() == 2) {
                const BigInt v = r == 1 ? p[0] : 2;
                add(instance(RuleId::base, BoundKind::lower, i, {}, v));
                add(instance(RuleId::base, BoundKind::upper, i, {}, v));
                if (r == 1)
                    return;
            }
            if (p.contains_two()) {
                if (auto red = intern(norm(p)); red && *red != i) {
                    for (auto kind : {BoundKind::lower, BoundKind::upper}) {
                        add(instance(RuleId::base, kind, i, {*red}));
                        add(instance(RuleId::base, kind, *red, {i}));
                    }
                }
                return;
            }
        }

        const auto counts = value_counts(p);
        const bool all_three_plus = p.ks().front() >= 3;

        if (rules_.has(RuleId::es) && all_three_plus) {
            auto inst = instance(RuleId::es, BoundKind::upper, i);
            inst.offset = 2 - r;
            bool complete = true;
            for (const auto& [value, count] : counts) {
                auto d = intern(reduce_twos(with_decremented(p, value)));
                if (!d) {
                    complete = false;
                    break;
                }
                inst.premises.insert(inst.premises.end(), static_cast<std::size_t>(count), *d);
            }
            if (complete)
                add(std::move(inst));
        }

        if (rules_.has(RuleId::mono)) {
            for (const auto& [value, count] : counts) {
                if (value < 3)
                    continue;
                auto d = intern(reduce_twos(with_decremented(p, value)));
                if (!d)
                    continue;
                add(instance(RuleId::mono, BoundKind::lower, i, {*d}));
                add(instance(RuleId::mono, BoundKind::upper, *d, {i}));
            }
        }

        if (rules_.has(RuleId::abbott) && r >= 2)
            ground_abbott(i, p, counts);

        if (rules_.has(RuleId::diagprod) && p.is_diagonal() && p[0] >= 3) {
            const int k = p[0];
            for (int s = 2; s * s <= k - 1; ++s) {
                if ((k - 1) % s != 0)
                    continue;
                const int t = (k - 1) / s;
                auto a = intern(Params::diagonal(r, s + 1));
                auto b = intern(Params::diagonal(r, t + 1));
                if (a && b)
                    add(instance(RuleId::diagprod, BoundKind::lower, i, {*a, *b}));
            }
        }

        if (rules_.has(RuleId::power) && p.is_diagonal())
            add(instance(RuleId::power, BoundKind::lower, i, {},
                 mp::pow(BigInt(p[0] - 1), static_cast<unsigned>(r)) + 1));

        if (p == Params::diagonal(r, 3)) {
            if (rules_.has(RuleId::two_r))
                add(instance(RuleId::two_r, BoundKind::lower, i, {},
                     mp::pow(BigInt(2), static_cast<unsigned>(r)) + 1));
            if (rules_.has(RuleId::r3cf) && r >= 4)
                add(instance(RuleId::r3cf, BoundKind::upper, i, {}, r3cf_bound(r)));
        }

        if (rules_.has(RuleId::befs) && r == 2 && (p[0] == 4 || p[1] == 4)) {
            const int t = p[0] == 4 ? p[1] : p[0];
            if (auto d = intern(norm(Params{3, t}))) {
                auto inst = instance(RuleId::befs, BoundKind::lower, i, {*d});
                inst.offset = 2 * t - 3;
                add(std::move(inst));
            }
        }

        if (dc_ && r >= 2 && all_three_plus)
            ground_dc(i, p, counts);
    }

    void ground_abbott(int i, const Params& p, const std::vector<std::pair<int, int>>& counts)
    {
        std::vector<int> take(counts.size(), 0);
        while (true) {
            std::size_t pos = 0;
            while (pos < take.size() && take[pos] == counts[pos].second)
                take[pos++] = 0;
            if (pos == take.size())
                break;
            ++take[pos];

            std::vector<int> left;
            std::vector<int> right;
            for (std::size_t v = 0; v < counts.size(); ++v) {
                left.insert(left.end(), static_cast<std::size_t>(take[v]), counts[v].first);
                right.insert(right.end(), static_cast<std::size_t>(counts[v].second - take[v]),
                             counts[v].first);
            }
            if (right.empty())
                continue;
            const Params a(left);
            const Params b(right);
            if (b < a)
                continue;
            auto ia = intern(norm(a));
            auto ib = intern(norm(b));
            if (ia && ib)
                add(instance(RuleId::abbott, BoundKind::lower, i, {*ia, *ib}));
        }
        (void)p;
    }

    void ground_dc(int i, const Params& p, const std::vector<std::pair<int, int>>& counts)
    {
        for (std::size_t x = 0; x < counts.size(); ++x) {
            for (std::size_t y = x; y < counts.size(); ++y) {
                const int a = counts[x].first;
                const int b = counts[y].first;
                if (x == y && counts[x].second < 2)
                    continue;
                const auto ia = first_index(p, a);
                const auto ib = x == y ? ia + 1 : first_index(p, b);

                // P is the original; the moved params lose one on a, gain one on b.
                const Params moved = with_replaced(p, ia, a - 1, ib, b + 1);
                const Params reduced = norm(moved);
                if (auto m = intern(reduced)) {
                    auto lower = instance(RuleId::dc, BoundKind::lower, i, {*m});
                    auto upper = instance(RuleId::dc, BoundKind::upper, *m, {i});
                    lower.strict = upper.strict = strict_;
                    lower.offset = strict_ ? 1 : 0;
                    upper.offset = strict_ ? -1 : 0;
                    if (reduced != moved)
                        lower.via = upper.via = moved;
                    add(std::move(lower));
                    add(std::move(upper));
                }

                // P as the moved side of a pair closer to the diagonal.
                if (a + 1 <= b - 1)
                    intern(with_replaced(p, ia, a + 1, ib, b - 1));
            }
        }
    }

    void propagate()
    {
        const auto n = params_.size();
        lower_.assign(n, std::nullopt);
        upper_.assign(n, std::nullopt);
        lower_why_.assign(n, nullptr);
        upper_why_.assign(n, nullptr);
        for (std::size_t i = 0; i < n; ++i) {
            if (const auto* fact = kb_.find(params_[i])) {
                lower_[i] = fact->lower;
                upper_[i] = fact->upper;
                lower_why_[i] = fact->lower_why;
                upper_why_[i] = fact->upper_why;
            }
        }

        std::vector<std::size_t> order(instances_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (options_.shuffle_seed) {
            std::mt19937_64 rng(*options_.shuffle_seed);
            std::shuffle(order.begin(), order.end(), rng);
        }

        dependents_.assign(2 * n, {});
        for (auto id : order)
            for (int prem : instances_[id].premises)
                dependents_[slot(prem, instances_[id].kind)].push_back(id);
        queued_.assign(2 * n, false);

        for (auto id : order)
            evaluate(instances_[id]);
        while (!queue_.empty()) {
            const auto s = queue_.front();
            queue_.pop_front();
            queued_[s] = false;
            for (auto id : dependents_[s])
                evaluate(instances_[id]);
        }
    }

    static std::size_t slot(int param, BoundKind kind)
    {
        return 2 * static_cast<std::size_t>(param) + (kind == BoundKind::upper ? 1 : 0);
    }

    std::optional<BigInt>& value(int param, BoundKind kind)
    {
        return kind == BoundKind::lower ? lower_[static_cast<std::size_t>(param)]
                                        : upper_[static_cast<std::size_t>(param)];
    }

    DerivationPtr& why(int param, BoundKind kind)
    {
        return kind == BoundKind::lower ? lower_why_[static_cast<std::size_t>(param)]
                                        : upper_why_[static_cast<std::size_t>(param)];
    }

    void evaluate(const Instance& inst)
    {
        ++stats_.evaluations;
        for (int prem : inst.premises)
            if (!value(prem, inst.kind))
                return;

        BigInt result;
        bool even = false;
        const auto premise = [&](std::size_t k) -> const BigInt& {
            return *value(inst.premises[k], inst.kind);
        };
        switch (inst.rule) {
        case RuleId::es: {
            result = inst.offset;
            for (std::size_t k = 0; k < inst.premises.size(); ++k)
                result += premise(k);
            if (rules_.es_even && inst.premises.size() == 2 && premise(0) % 2 == 0 &&
                premise(1) % 2 == 0) {
                result -= 1;
                even = true;
            }
            break;
        }
        case RuleId::abbott:
        case RuleId::diagprod:
            result = (premise(0) - 1) * (premise(1) - 1) + 1;
            break;
        default:
            if (inst.constant)
                result = *inst.constant;
            else
                result = premise(0) + inst.offset;
            break;
        }

        int depth = 0;
        for (int prem : inst.premises)
            if (const auto& w = why(prem, inst.kind))
                depth = std::max(depth, w->depth + 1);
        if (inst.via)
            ++depth;

        auto& current = value(inst.conclusion, inst.kind);
        auto& current_why = why(inst.conclusion, inst.kind);
        const bool better = !current || (inst.kind == BoundKind::lower ? result > *current
                                                                       : result < *current);
        const bool shallower = current && result == *current &&
                               (!current_why || depth < current_why->depth);
        if (!better && !shallower)
            return;

        current = result;
        current_why = make_derivation(inst, result, even);
        ++stats_.updates;
        const auto s = slot(inst.conclusion, inst.kind);
        if (!queued_[s]) {
            queued_[s] = true;
            queue_.push_back(s);
        }
    }

    DerivationPtr make_derivation(const Instance& inst, const BigInt& result, bool even)
    {
        auto node = [&](const Params& p, RuleId rule, const BigInt& v,
                        std::vector<DerivationPtr> premises) {
            auto d = std::make_shared<Derivation>();
            d->params = p;
            d->kind = inst.kind;
            d->value = v;
            d->rule = rule;
            d->premises = std::move(premises);
            for (const auto& prem : d->premises)
                d->depth = std::max(d->depth, prem->depth + 1);
            return d;
        };
        std::vector<DerivationPtr> premises;
        for (int prem : inst.premises) {
            auto w = why(prem, inst.kind);
            if (!w) {
                const auto& pp = params_[static_cast<std::size_t>(prem)];
                auto leaf = std::make_shared<Derivation>();
                leaf->params = pp;
                leaf->kind = inst.kind;
                leaf->value = *value(prem, inst.kind);
                w = leaf;
            }
            premises.push_back(std::move(w));
        }
        const auto& conclusion = params_[static_cast<std::size_t>(inst.conclusion)];

        if (inst.via && inst.kind == BoundKind::lower) {
            auto step = node(*inst.via, RuleId::base, premises[0]->value, {premises[0]});
            auto d = node(conclusion, RuleId::dc, result, {step});
            d->strict = inst.strict;
            return d;
        }
        if (inst.via && inst.kind == BoundKind::upper) {
            auto step = node(*inst.via, RuleId::dc, result, premises);
            step->strict = inst.strict;
            return node(conclusion, RuleId::base, result, {step});
        }
        auto d = node(conclusion, inst.rule, result, std::move(premises));
        d->strict = inst.rule == RuleId::dc && inst.strict;
        d->even_strengthening = even;
        return d;
    }

    void write_back()
    {
        for (std::size_t i = 0; i < params_.size(); ++i) {
            const auto* fact = kb_.find(params_[i]);
            if (lower_[i] && (!fact || fact->lower_why != lower_why_[i]))
                kb_.tighten(params_[i], BoundKind::lower, *lower_[i], lower_why_[i]);
            if (upper_[i] && (!fact || fact->upper_why != upper_why_[i]))
                kb_.tighten(params_[i], BoundKind::upper, *upper_[i], upper_why_[i]);
        }
    }

    KnowledgeBase& kb_;
    const RuleSet& rules_;
    const Budget& budget_;
    const ClosureOptions& options_;
    bool base_;
    bool dc_;
    bool strict_;

    std::map<Params, int> index_;
    std::vector<Params> params_;
    std::deque<int> pending_;
    std::vector<Instance> instances_;

    std::vector<std::optional<BigInt>> lower_;
    std::vector<std::optional<BigInt>> upper_;
    std::vector<DerivationPtr> lower_why_;
    std::vector<DerivationPtr> upper_why_;
    std::vector<std::vector<std::size_t>> dependents_;
    std::vector<bool> queued_;
    std::deque<std::size_t> queue_;

    ClosureStats stats_;
};

}  // namespace

ClosureStats derive_closure(KnowledgeBase& kb, const RuleSet& rules, const Budget& budget,
                            const ClosureOptions& options)
{
    return Closure(kb, rules, budget, options).run();
}

}  // namespace ramsey
