#include "critnum/gset.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace critnum {

namespace {

// Above this order, non-cyclic translation falls back to an element loop
// instead of storing per-digit masks.
constexpr std::uint32_t kMaskTableLimit = 4096;

}  // namespace

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t n = spec_.order();
    const auto& factors = spec_.invariant_factors();

    if (n <= 64) {
        full_word_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        // digit_low[k][t]: positions whose digit k is below d_k - t
        std::vector<std::vector<std::uint64_t>> digit_low(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
            digit_low[k].assign(factors[k], 0);
            for (std::uint32_t t = 0; t < factors[k]; ++t) {
                for (std::uint32_t x = 0; x < n; ++x) {
                    if ((x / spec_.stride(k)) % factors[k] < factors[k] - t) {
                        digit_low[k][t] |= std::uint64_t{1} << x;
                    }
                }
            }
        }
        word_plans_.resize(n);
        for (std::uint32_t t = 0; t < n; ++t) {
            const auto digits = spec_.digits(Element{t});
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (digits[k] == 0) {
                    continue;
                }
                WordShift op;
                op.low = digit_low[k][digits[k]];
                op.high = full_word_ & ~op.low;
                op.up = digits[k] * spec_.stride(k);
                op.down = (factors[k] - digits[k]) * spec_.stride(k);
                word_plans_[t].push_back(op);
            }
        }
    }

    if (!spec_.is_cyclic() && n <= kMaskTableLimit) {
        masks_.resize(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
            masks_[k].assign(factors[k], Bits(n));
            for (std::uint32_t x = 0; x < n; ++x) {
                const std::uint32_t digit = (x / spec_.stride(k)) % factors[k];
                // digit < d - t  <=>  t < d - digit
                for (std::uint32_t t = 0; t < factors[k] - digit; ++t) {
                    masks_[k][t].set(x);
                }
            }
        }
    }
}

GroupPtr Group::make(GroupSpec spec) {
    return std::make_shared<const Group>(std::move(spec));
}

GroupPtr Group::make(std::initializer_list<std::uint64_t> factors) {
    return make(GroupSpec::make(factors));
}

GroupPtr Group::cyclic(std::uint32_t n) {
    return make(GroupSpec::cyclic(n));
}

GroupPtr Group::parse(std::string_view text) {
    return make(GroupSpec::parse(text));
}

Bits Group::translate(const Bits& bits, Element t) const {
    const std::uint32_t n = order();
    if (t.index >= n) {
        throw std::invalid_argument("translate: element out of range");
    }
    if (t.index == 0) {
        return bits;
    }
    if (spec_.is_cyclic()) {
        return (bits << t.index) | (bits >> (n - t.index));
    }
    if (!masks_.empty()) {
        Bits out = bits;
        const auto digits = spec_.digits(t);
        const auto& factors = spec_.invariant_factors();
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (digits[k] == 0) {
                continue;
            }
            const Bits& low = masks_[k][digits[k]];
            const std::uint32_t up = digits[k] * spec_.stride(k);
            const std::uint32_t down = (factors[k] - digits[k]) * spec_.stride(k);
            out = ((out & low) << up) | ((out - low) >> down);
        }
        return out;
    }
    Bits out(n);
    for (auto x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
        out.set(spec_.add(Element{static_cast<std::uint32_t>(x)}, t).index);
    }
    return out;
}

GSet::GSet(GroupPtr group) : group_(std::move(group)) {
    if (!group_) {
        throw std::invalid_argument("GSet: null group");
    }
    bits_.resize(group_->order());
}

GSet::GSet(GroupPtr group, std::initializer_list<std::uint32_t> indices)
    : GSet(std::move(group), std::span<const std::uint32_t>(indices.begin(), indices.size())) {}

GSet::GSet(GroupPtr group, std::span<const std::uint32_t> indices) : GSet(std::move(group)) {
    for (const std::uint32_t i : indices) {
        insert(Element{i});
    }
}

GSet::GSet(GroupPtr group, Bits bits) : group_(std::move(group)), bits_(std::move(bits)) {
    if (!group_) {
        throw std::invalid_argument("GSet: null group");
    }
    if (bits_.size() != group_->order()) {
        throw std::invalid_argument("GSet: bit-vector length differs from group order");
    }
    refresh_size();
}

GSet GSet::full(GroupPtr group) {
    GSet out(std::move(group));
    out.bits_.set();
    out.refresh_size();
    return out;
}

GSet GSet::from_word(GroupPtr group, std::uint64_t word) {
    GSet out(std::move(group));
    if (!out.group().fits_word()) {
        throw std::invalid_argument("GSet::from_word: group order exceeds 64");
    }
    if ((word & ~out.group().full_word()) != 0) {
        throw std::invalid_argument("GSet::from_word: bits beyond group order");
    }
    out.bits_.clear();
    out.bits_.append(word);
    out.bits_.resize(out.group().order());
    out.refresh_size();
    return out;
}

GSet GSet::parse(GroupPtr group, std::string_view text) {
    GSet out(std::move(group));
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto fail = [&] { throw std::invalid_argument("cannot parse set '" + std::string(text) + "'"); };
    skip();
    if (pos >= text.size() || text[pos] != '{') {
        fail();
    }
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == '}') {
        return out;
    }
    while (true) {
        skip();
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            fail();
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        out.insert(Element{value});
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            break;
        }
        fail();
    }
    skip();
    if (pos != text.size()) {
        fail();
    }
    return out;
}

bool GSet::contains(Element a) const {
    if (a.index >= bits_.size()) {
        throw std::invalid_argument("GSet::contains: element out of range");
    }
    return bits_.test(a.index);
}

void GSet::insert(Element a) {
    if (a.index >= bits_.size()) {
        throw std::invalid_argument("GSet::insert: element out of range");
    }
    if (!bits_.test(a.index)) {
        bits_.set(a.index);
        ++size_;
    }
}

void GSet::erase(Element a) {
    if (a.index >= bits_.size()) {
        throw std::invalid_argument("GSet::erase: element out of range");
    }
    if (bits_.test(a.index)) {
        bits_.reset(a.index);
        --size_;
    }
}

std::uint64_t GSet::word() const {
    if (!group_->fits_word()) {
        throw std::invalid_argument("GSet::word: group order exceeds 64");
    }
    std::uint64_t w = 0;
    boost::to_block_range(bits_, &w);
    return w;
}

std::vector<std::uint32_t> GSet::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(size_);
    for (auto x = bits_.find_first(); x != Bits::npos; x = bits_.find_next(x)) {
        out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
}

GSet GSet::translated(Element t) const {
    return GSet(group_, group_->translate(bits_, t));
}

GSet GSet::negated() const {
    return dilated(-1);
}

GSet GSet::dilated(std::int64_t k) const {
    GSet out(group_);
    for (auto x = bits_.find_first(); x != Bits::npos; x = bits_.find_next(x)) {
        out.insert(spec().scale(k, Element{static_cast<std::uint32_t>(x)}));
    }
    return out;
}

GSet GSet::complement() const {
    return GSet(group_, ~bits_);
}

bool GSet::same_group(const GSet& other) const {
    return group_ == other.group_ || group_->spec() == other.group_->spec();
}

void GSet::require_same_group(const GSet& other) const {
    if (!same_group(other)) {
        throw std::invalid_argument("GSet: operands belong to different groups (" + spec().to_string() +
                                    " vs " + other.spec().to_string() + ")");
    }
}

bool GSet::is_subset_of(const GSet& other) const {
    require_same_group(other);
    return bits_.is_subset_of(other.bits_);
}

GSet& GSet::operator|=(const GSet& other) {
    require_same_group(other);
    bits_ |= other.bits_;
    refresh_size();
    return *this;
}

GSet& GSet::operator&=(const GSet& other) {
    require_same_group(other);
    bits_ &= other.bits_;
    refresh_size();
    return *this;
}

GSet& GSet::operator-=(const GSet& other) {
    require_same_group(other);
    bits_ -= other.bits_;
    refresh_size();
    return *this;
}

bool operator==(const GSet& a, const GSet& b) {
    return a.same_group(b) && a.bits_ == b.bits_;
}

std::string GSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto x = bits_.find_first(); x != Bits::npos; x = bits_.find_next(x)) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(x);
    }
    out += '}';
    return out;
}

GSet two_torsion(const GroupPtr& group) {
    return halving_set(group, Element{0});
}

GSet halving_set(const GroupPtr& group, Element g) {
    const GroupSpec& spec = group->spec();
    if (!spec.contains(g)) {
        throw std::invalid_argument("halving_set: element out of range");
    }
    GSet out(group);
    for (std::uint32_t x = 0; x < spec.order(); ++x) {
        if (spec.scale(2, Element{x}) == g) {
            out.insert(Element{x});
        }
    }
    return out;
}

}  // namespace critnum
