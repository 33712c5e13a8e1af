#include "critnum/sumset.hpp"

#include <stdexcept>

namespace critnum {

GSet pair_sumset(const GSet& a, const GSet& b) {
    if (!a.same_group(b)) {
        throw std::invalid_argument("pair_sumset: operands belong to different groups");
    }
    const GSet& small = a.size() <= b.size() ? a : b;
    const GSet& large = a.size() <= b.size() ? b : a;
    const Group& group = a.group();
    Bits out(group.order());
    const Bits& bits = small.bits();
    for (auto x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
        out |= group.translate(large.bits(), Element{static_cast<std::uint32_t>(x)});
    }
    return GSet(a.group_ptr(), std::move(out));
}

GSet h_fold(const GSet& a, int h) {
    if (h < 1) {
        throw std::invalid_argument("h_fold: h must be >= 1");
    }
    GSet out = a;
    for (int j = 1; j < h; ++j) {
        out = pair_sumset(out, a);
    }
    return out;
}

std::vector<GSet> restricted_layers(const GSet& a, int h_max) {
    if (h_max < 0) {
        throw std::invalid_argument("restricted_layers: h must be >= 0");
    }
    const Group& group = a.group();
    std::vector<Bits> layers(static_cast<std::size_t>(h_max) + 1, Bits(group.order()));
    layers[0].set(0);
    int used = 0;
    const Bits& bits = a.bits();
    for (auto x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
        ++used;
        const Element t{static_cast<std::uint32_t>(x)};
        for (int j = std::min(used, h_max); j >= 1; --j) {
            layers[j] |= group.translate(layers[j - 1], t);
        }
    }
    std::vector<GSet> out;
    out.reserve(layers.size());
    for (auto& layer : layers) {
        out.emplace_back(a.group_ptr(), std::move(layer));
    }
    return out;
}

GSet h_fold_restricted(const GSet& a, int h) {
    if (h < 0) {
        throw std::invalid_argument("h_fold_restricted: h must be >= 0");
    }
    if (static_cast<std::size_t>(h) > a.size()) {
        return GSet(a.group_ptr());
    }
    return std::move(restricted_layers(a, h).back());
}

GSet subset_sums(const GSet& a) {
    const Group& group = a.group();
    Bits sums(group.order());
    sums.set(0);
    const Bits& bits = a.bits();
    for (auto x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
        sums |= group.translate(sums, Element{static_cast<std::uint32_t>(x)});
    }
    return GSet(a.group_ptr(), std::move(sums));
}

bool is_subgroup(const GSet& s) {
    if (s.empty() || !s.contains(Element{0})) {
        return false;
    }
    return pair_sumset(s, s) == s;
}

bool is_coset(const GSet& a) {
    if (a.empty()) {
        return false;
    }
    const Element first{a.indices().front()};
    return is_subgroup(a.translated(a.spec().neg(first)));
}

bool is_coset_of_subgroup_within(const GSet& a, const GSet& ambient) {
    if (a.empty()) {
        return false;
    }
    const Element first{a.indices().front()};
    const GSet shifted = a.translated(a.spec().neg(first));
    return shifted.is_subset_of(ambient) && is_subgroup(shifted);
}

bool is_coset_of_two_torsion_subgroup_minus_one(const GSet& a, const GSet& two_torsion_subgroup) {
    if (a.empty()) {
        // {x} minus x for the trivial subgroup
        return true;
    }
    // Any such coset containing a lies inside a + L.
    const Element first{a.indices().front()};
    const GSet candidates = two_torsion_subgroup.translated(first) - a;
    for (const std::uint32_t x : candidates.indices()) {
        GSet filled = a;
        filled.insert(Element{x});
        if (is_coset_of_subgroup_within(filled, two_torsion_subgroup)) {
            return true;
        }
    }
    return false;
}

bool is_two_cosets_of_order_two_subgroup(const GSet& a) {
    if (a.size() != 4) {
        return false;
    }
    const GroupSpec& spec = a.spec();
    for (std::uint32_t t = 1; t < spec.order(); ++t) {
        const Element e{t};
        if (spec.scale(2, e) != spec.zero()) {
            continue;
        }
        if (a.translated(e) == a) {
            return true;
        }
    }
    return false;
}

}  // namespace critnum
