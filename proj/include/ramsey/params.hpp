#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical key of a Ramsey number: the clique targets sorted ascending.
/// Every entry is at least 2.
class Params {
public:
    Params() = default;
    explicit Params(std::vector<int> ks);
    Params(std::initializer_list<int> ks) : Params(std::vector<int>(ks)) {}

    static Params diagonal(int r, int k);

    [[nodiscard]] const std::vector<int>& ks() const noexcept { return ks_; }
    [[nodiscard]] std::size_t colors() const noexcept { return ks_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return ks_[i]; }
    [[nodiscard]] int max_k() const noexcept { return ks_.empty() ? 0 : ks_.back(); }
    [[nodiscard]] int sum() const noexcept;
    [[nodiscard]] bool is_diagonal() const noexcept;
    [[nodiscard]] bool contains_two() const noexcept { return !ks_.empty() && ks_.front() == 2; }

    /// "3,3,5" form, used by CLI flags and pair files.
    [[nodiscard]] std::string to_list() const;
    /// "R(3,3,5)".
    [[nodiscard]] std::string to_string() const;

    auto operator<=>(const Params&) const = default;

private:
    std::vector<int> ks_;
};

Params canonicalize(std::span<const int> raw);

/// Drops targets equal to 2 (R(2, rest) = R(rest)); all-2 params become (2).
Params reduce_twos(const Params& p);

/// Parses "k1,k2,..." (unsorted allowed).
Params parse_params_list(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Params& p);

}  // namespace ramsey
