#include "critnum/group.hpp"

#include "critnum/number_theory.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace critnum {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

// Partitions of k into non-increasing parts, each listed largest part first.
void partitions(std::uint32_t k, std::uint32_t max_part, std::vector<std::uint32_t>& current,
                std::vector<std::vector<std::uint32_t>>& out) {
    if (k == 0) {
        out.push_back(current);
        return;
    }
    for (std::uint32_t part = std::min(k, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(k - part, part, current, out);
        current.pop_back();
    }
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= base;
        if (r >= kMaxOrder) {
            throw std::invalid_argument("group order too large");
        }
    }
    return r;
}

}  // namespace

GroupSpec GroupSpec::make(std::span<const std::uint64_t> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("make_group: need at least one cyclic factor");
    }
    std::uint64_t order = 1;
    std::map<std::uint64_t, std::vector<std::uint32_t>> exponents_by_prime;
    for (const std::uint64_t f : factors) {
        if (f < 2) {
            throw std::invalid_argument("make_group: every cyclic factor must be >= 2");
        }
        order *= f;
        if (order >= kMaxOrder) {
            throw std::invalid_argument("make_group: group order too large");
        }
        for (const auto& pp : factorize(f)) {
            exponents_by_prime[pp.prime].push_back(pp.exponent);
        }
    }

    std::size_t chains = 0;
    for (auto& [p, exps] : exponents_by_prime) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        chains = std::max(chains, exps.size());
    }
    // Chain j collects the j-th largest prime power of every prime.
    std::vector<std::uint64_t> largest_first(chains, 1);
    for (const auto& [p, exps] : exponents_by_prime) {
        for (std::size_t j = 0; j < exps.size(); ++j) {
            largest_first[j] *= checked_pow(p, exps[j]);
        }
    }

    GroupSpec spec;
    spec.order_ = static_cast<std::uint32_t>(order);
    spec.factors_.assign(largest_first.rbegin(), largest_first.rend());
    spec.strides_.assign(spec.factors_.size(), 1);
    for (std::size_t i = spec.factors_.size(); i-- > 1;) {
        spec.strides_[i - 1] = spec.strides_[i] * spec.factors_[i];
    }
    return spec;
}

GroupSpec GroupSpec::make(std::initializer_list<std::uint64_t> factors) {
    return make(std::span<const std::uint64_t>(factors.begin(), factors.size()));
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
    return make({n});
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<std::uint64_t> factors;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto fail = [&]() -> GroupSpec {
        throw std::invalid_argument("cannot parse group '" + std::string(text) + "'");
    };
    while (true) {
        skip_space();
        if (pos >= text.size() || std::tolower(static_cast<unsigned char>(text[pos])) != 'z') {
            return fail();
        }
        ++pos;
        if (pos < text.size() && text[pos] == '_') {
            ++pos;
        }
        const bool braced = pos < text.size() && text[pos] == '{';
        if (braced) {
            ++pos;
        }
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            return fail();
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        if (braced) {
            if (pos >= text.size() || text[pos] != '}') {
                return fail();
            }
            ++pos;
        }
        factors.push_back(value);
        skip_space();
        if (pos == text.size()) {
            break;
        }
        if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x') {
            return fail();
        }
        ++pos;
    }
    return make(factors);
}

std::string GroupSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i != 0) {
            out += 'x';
        }
        out += 'Z';
        out += std::to_string(factors_[i]);
    }
    return out;
}

void GroupSpec::check(Element a) const {
    if (a.index >= order_) {
        throw std::invalid_argument("element index " + std::to_string(a.index) + " out of range for " +
                                    to_string());
    }
}

std::vector<std::uint32_t> GroupSpec::digits(Element a) const {
    check(a);
    std::vector<std::uint32_t> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = (a.index / strides_[i]) % factors_[i];
    }
    return out;
}

Element GroupSpec::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() != factors_.size()) {
        throw std::invalid_argument("from_digits: wrong number of digits");
    }
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (digits[i] >= factors_[i]) {
            throw std::invalid_argument("from_digits: digit out of range");
        }
        index += digits[i] * strides_[i];
    }
    return Element{index};
}

Element GroupSpec::add(Element a, Element b) const {
    check(a);
    check(b);
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint32_t da = (a.index / strides_[i]) % factors_[i];
        const std::uint32_t db = (b.index / strides_[i]) % factors_[i];
        std::uint32_t s = da + db;
        if (s >= factors_[i]) {
            s -= factors_[i];
        }
        index += s * strides_[i];
    }
    return Element{index};
}

Element GroupSpec::neg(Element a) const {
    check(a);
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint32_t da = (a.index / strides_[i]) % factors_[i];
        index += ((factors_[i] - da) % factors_[i]) * strides_[i];
    }
    return Element{index};
}

Element GroupSpec::scale(std::int64_t k, Element a) const {
    check(a);
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t d = factors_[i];
        const std::int64_t da = (a.index / strides_[i]) % factors_[i];
        std::int64_t s = ((k % d) * da) % d;
        if (s < 0) {
            s += d;
        }
        index += static_cast<std::uint32_t>(s) * strides_[i];
    }
    return Element{index};
}

GroupSpec make_group(std::span<const std::uint64_t> factors) {
    return GroupSpec::make(factors);
}

std::vector<GroupSpec> groups_of_order(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("groups_of_order: n must be >= 2");
    }
    const auto fact = factorize(n);
    std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
    for (const auto& pp : fact) {
        std::vector<std::vector<std::uint32_t>> parts;
        std::vector<std::uint32_t> current;
        partitions(pp.exponent, pp.exponent, current, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<GroupSpec> out;
    std::vector<std::size_t> choice(fact.size(), 0);
    while (true) {
        std::vector<std::uint64_t> factors;
        for (std::size_t i = 0; i < fact.size(); ++i) {
            for (const std::uint32_t e : per_prime[i][choice[i]]) {
                factors.push_back(checked_pow(fact[i].prime, e));
            }
        }
        out.push_back(GroupSpec::make(factors));

        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == per_prime[i].size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size()) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) { return a > b; });
    return out;
}

std::uint64_t count_groups_of_order(std::uint32_t n) {
    std::uint64_t count = 1;
    for (const auto& pp : factorize(n)) {
        count *= partition_count(pp.exponent);
    }
    return count;
}

}  // namespace critnum
