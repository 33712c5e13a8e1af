#include "brute.hpp"

#include <bit>
#include <numeric>

namespace brute {

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
    for (const int f : factors_) {
        order_ *= f;
    }
    add_.resize(static_cast<std::size_t>(order_ * order_));
    for (int a = 0; a < order_; ++a) {
        const auto da = digits(a);
        for (int b = 0; b < order_; ++b) {
            const auto db = digits(b);
            std::vector<int> s(factors_.size());
            for (std::size_t k = 0; k < factors_.size(); ++k) {
                s[k] = (da[k] + db[k]) % factors_[k];
            }
            add_[static_cast<std::size_t>(a * order_ + b)] = index(s);
        }
    }
}

std::vector<int> Group::digits(int x) const {
    std::vector<int> d(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        d[k] = x % factors_[k];
        x /= factors_[k];
    }
    return d;
}

int Group::index(const std::vector<int>& d) const {
    int x = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        x = x * factors_[k] + d[k];
    }
    return x;
}

int Group::neg(int a) const {
    for (int b = 0; b < order_; ++b) {
        if (add(a, b) == 0) {
            return b;
        }
    }
    return -1;
}

int Group::times(int k, int a) const {
    int s = 0;
    for (int i = 0; i < k; ++i) {
        s = add(s, a);
    }
    return s;
}

int Group::exponent() const {
    int e = 1;
    for (const int f : factors_) {
        e = std::lcm(e, f);
    }
    return e;
}

Set set_of_mask(std::uint64_t mask) {
    Set s;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) {
            s.insert(i);
        }
    }
    return s;
}

std::vector<int> elements(const Set& s) {
    return {s.begin(), s.end()};
}

Set sumset(const Group& g, const Set& a, int h) {
    Set cur{0};
    for (int i = 0; i < h; ++i) {
        Set next;
        for (const int x : cur) {
            for (const int y : a) {
                next.insert(g.add(x, y));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

void combos(const Group& g, const std::vector<int>& a, std::size_t start, int left, int acc, Set& out) {
    if (left == 0) {
        out.insert(acc);
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= a.size(); ++i) {
        combos(g, a, i + 1, left - 1, g.add(acc, a[i]), out);
    }
}

}  // namespace

Set restricted_sumset(const Group& g, const Set& a, int h) {
    Set out;
    if (h > static_cast<int>(a.size())) {
        return out;
    }
    combos(g, elements(a), 0, h, 0, out);
    return out;
}

Set subset_sums(const Group& g, const Set& a) {
    Set out{0};
    for (const int x : a) {
        Set next = out;
        for (const int s : out) {
            next.insert(g.add(s, x));
        }
        out = std::move(next);
    }
    return out;
}

void for_each_subset(int n, int k, const std::function<void(std::uint64_t)>& f) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) == k) {
            f(mask);
        }
    }
}

int rho(const Group& g, int m, int h) {
    int best = g.order() + 1;
    for_each_subset(g.order(), m, [&](std::uint64_t mask) {
        best = std::min(best, static_cast<int>(sumset(g, set_of_mask(mask), h).size()));
    });
    return best;
}

int rho_hat(const Group& g, int m, int h) {
    int best = g.order() + 1;
    for_each_subset(g.order(), m, [&](std::uint64_t mask) {
        best = std::min(best, static_cast<int>(restricted_sumset(g, set_of_mask(mask), h).size()));
    });
    return best;
}

namespace {

int critical(const Group& g, bool star, const std::function<bool(const Set&)>& full) {
    // Largest set that fails; the answer is one more, if some size always works.
    const int n = g.order();
    int largest_failure = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (star && (mask & 1U)) {
            continue;
        }
        const int size = std::popcount(mask);
        if (size > largest_failure && !full(set_of_mask(mask))) {
            largest_failure = size;
        }
    }
    const int pool = star ? n - 1 : n;
    return largest_failure >= pool ? -1 : largest_failure + 1;
}

}  // namespace

int chi(const Group& g, int h, bool star) {
    return critical(g, star, [&](const Set& a) {
        return !a.empty() && static_cast<int>(sumset(g, a, h).size()) == g.order();
    });
}

int chi_hat(const Group& g, int h, bool star) {
    return critical(g, star, [&](const Set& a) {
        return static_cast<int>(restricted_sumset(g, a, h).size()) == g.order();
    });
}

int sigma_critical(const Group& g) {
    return critical(g, true, [&](const Set& a) { return static_cast<int>(subset_sums(g, a).size()) == g.order(); });
}

int max_k_free(int n, int k) {
    const Group g({n});
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) {
            continue;
        }
        const Set a = set_of_mask(mask);
        const Set ka = sumset(g, a, k);
        bool disjoint = true;
        for (const int x : a) {
            if (ka.count(x) != 0) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) {
            best = size;
        }
    }
    return best;
}

}  // namespace brute
