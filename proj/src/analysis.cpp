#include <cmath>
#include <cstdio>
#include <map>

#include "ramsey/engine.hpp"

namespace ramsey {

std::string_view dc_status_name(DcStatus s)
{
    switch (s) {
    case DcStatus::contradiction:
        return "contradiction";
    case DcStatus::not_followed:
        return "not-followed";
    case DcStatus::consistent:
        return "consistent";
    }
    return "?";
}

bool is_dc_adjacent(const Params& moved, const Params& original)
{
    if (moved.colors() != original.colors() || moved.colors() < 2)
        return false;
    std::map<int, int> balance;
    for (int k : original.ks())
        ++balance[k];
    for (int k : moved.ks())
        --balance[k];
    std::vector<int> removed;
    std::vector<int> added;
    for (auto [k, c] : balance) {
        for (int i = 0; i < c; ++i)
            removed.push_back(k);
        for (int i = 0; i < -c; ++i)
            added.push_back(k);
    }
    if (removed.size() != 2 || added.size() != 2)
        return false;
    const int a = removed[0];
    const int b = removed[1];
    return a >= 3 && added[0] == a - 1 && added[1] == b + 1;
}

std::vector<DcPair> dc_adjacent_pairs(const KnowledgeBase& kb, const Budget& budget)
{
    std::vector<DcPair> out;
    for (const auto& [original, fact] : kb.facts()) {
        if (original.colors() < 2 || original[0] < 3 || !budget.admits(original))
            continue;
        const auto& ks = original.ks();
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (i > 0 && ks[i] == ks[i - 1])
                continue;
            for (std::size_t j = i + 1; j < ks.size(); ++j) {
                if (j > i + 1 && ks[j] == ks[j - 1])
                    continue;
                auto moved_ks = ks;
                moved_ks[i] -= 1;
                moved_ks[j] += 1;
                Params moved(std::move(moved_ks));
                if (budget.admits(moved) && kb.find(moved))
                    out.push_back({moved, original});
            }
        }
    }
    return out;
}

std::vector<DcPairReport> check_dc(const KnowledgeBase& kb, std::span<const DcPair> pairs)
{
    std::vector<DcPairReport> out;
    out.reserve(pairs.size());
    for (const auto& pair : pairs) {
        DcPairReport rep;
        rep.pair = pair;
        rep.moved = kb.best_bounds(pair.moved);
        rep.original = kb.best_bounds(pair.original);
        if (rep.moved.lower && rep.original.upper && *rep.moved.lower > *rep.original.upper)
            rep.status = DcStatus::contradiction;
        else if (rep.moved.lower && rep.original.lower && *rep.moved.lower > *rep.original.lower)
            rep.status = DcStatus::not_followed;
        else
            rep.status = DcStatus::consistent;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<DcPairReport> check_dc(const KnowledgeBase& kb, const Budget& budget)
{
    const auto pairs = dc_adjacent_pairs(kb, budget);
    return check_dc(kb, pairs);
}

double integer_root(const BigInt& value, int r)
{
    if (r < 1)
        throw Error("root: degree must be positive");
    if (value <= 0)
        return 0.0;
    const auto x = value.convert_to<long double>();
    return static_cast<double>(std::exp(std::log(x) / static_cast<long double>(r)));
}

RatioReport ratio_report(const KnowledgeBase& kb, int k, int r_max)
{
    if (k < 2)
        throw Error("ratios: clique size must be at least 2");
    RatioReport report;
    report.k = k;
    for (int r = 1; r <= r_max; ++r) {
        const auto bounds = kb.best_bounds(Params::diagonal(r, k));
        if (!bounds.lower && !bounds.upper)
            continue;
        RatioRow row;
        row.r = r;
        if (bounds.lower) {
            row.lower_root = integer_root(*bounds.lower - 1, r);
            if (!report.sup_lower || *row.lower_root > *report.sup_lower) {
                report.sup_lower = row.lower_root;
                report.sup_r = r;
            }
        }
        if (bounds.upper)
            row.upper_root = integer_root(*bounds.upper - 1, r);
        report.rows.push_back(row);
    }
    return report;
}

std::string format_decimal(double value, int places)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

}  // namespace ramsey
