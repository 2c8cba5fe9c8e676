#include "ramsey/params.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ramsey {

Params::Params(std::vector<int> ks) : ks_(std::move(ks))
{
    if (ks_.empty())
        throw Error("params: empty clique-target list");
    for (int k : ks_)
        if (k < 2)
            throw Error("params: clique target " + std::to_string(k) + " is below 2");
    std::sort(ks_.begin(), ks_.end());
}

Params Params::diagonal(int r, int k)
{
    if (r < 1)
        throw Error("params: color count must be positive");
    return Params(std::vector<int>(static_cast<std::size_t>(r), k));
}

int Params::sum() const noexcept
{
    return std::accumulate(ks_.begin(), ks_.end(), 0);
}

bool Params::is_diagonal() const noexcept
{
    return !ks_.empty() && ks_.front() == ks_.back();
}

std::string Params::to_list() const
{
    std::string out;
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(ks_[i]);
    }
    return out;
}

std::string Params::to_string() const
{
    return "R(" + to_list() + ")";
}

Params canonicalize(std::span<const int> raw)
{
    return Params(std::vector<int>(raw.begin(), raw.end()));
}

Params reduce_twos(const Params& p)
{
    if (p.colors() <= 1 || !p.contains_two())
        return p;
    std::vector<int> rest;
    for (int k : p.ks())
        if (k != 2)
            rest.push_back(k);
    if (rest.empty())
        return Params{2};
    return Params(std::move(rest));
}

Params parse_params_list(const std::string& text)
{
    std::vector<int> ks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        auto token = text.substr(pos, comma - pos);
        auto first = token.find_first_not_of(' ');
        auto last = token.find_last_not_of(' ');
        if (first == std::string::npos)
            throw Error("params: empty entry in '" + text + "'");
        token = token.substr(first, last - first + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error("params: not an integer: '" + token + "'");
        ks.push_back(value);
        pos = comma + 1;
    }
    return Params(std::move(ks));
}

std::ostream& operator<<(std::ostream& os, const Params& p)
{
    return os << p.to_string();
}

}  // namespace ramsey
