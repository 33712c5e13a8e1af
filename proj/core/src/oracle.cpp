#include "critnum/oracle.hpp"

#include "critnum/number_theory.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace critnum {

void SearchBudget::validate() const {
    if (max_nodes == 0 || !(max_seconds > 0.0) || exhaustive_threshold_n == 0) {
        throw std::invalid_argument("search budget limits must be positive");
    }
}

SearchBudget apply_env_overrides(SearchBudget budget) {
    if (const char* env = std::getenv("CRITNUM_BUDGET_SECONDS")) {
        char* end = nullptr;
        const double seconds = std::strtod(env, &end);
        if (end == env || !(seconds > 0.0)) {
            throw std::invalid_argument("CRITNUM_BUDGET_SECONDS must be a positive number");
        }
        budget.max_seconds = seconds;
    }
    return budget;
}

namespace {

using Word = std::uint64_t;

constexpr Word bit(std::uint32_t x) {
    return Word{1} << x;
}

int popcount(Word w) {
    return std::popcount(w);
}

std::uint32_t lowest(Word w) {
    return static_cast<std::uint32_t>(std::countr_zero(w));
}

std::vector<std::uint32_t> word_elements(Word w) {
    std::vector<std::uint32_t> out;
    while (w != 0) {
        out.push_back(lowest(w));
        w &= w - 1;
    }
    return out;
}

class Clock {
public:
    Clock(const SearchBudget& budget, std::uint32_t n)
        : probe_(n > budget.exhaustive_threshold_n),
          max_nodes_(probe_ ? std::min(budget.max_nodes, SearchBudget::kProbeNodes) : budget.max_nodes),
          max_seconds_(budget.max_seconds),
          start_(std::chrono::steady_clock::now()) {
        budget.validate();
    }

    bool tick() {
        if (tripped_) {
            return false;
        }
        if (++nodes_ > max_nodes_) {
            tripped_ = true;
            return false;
        }
        if ((nodes_ & 0x3FF) == 0 && elapsed_ms() > max_seconds_ * 1000.0) {
            tripped_ = true;
            return false;
        }
        return true;
    }

    bool tripped() const { return tripped_; }
    bool exhaustive() const { return !tripped_ && !probe_; }
    std::uint64_t nodes() const { return nodes_; }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(SearchResult& r) const {
        r.exhaustive = exhaustive();
        r.nodes = nodes_;
        r.elapsed_ms = elapsed_ms();
    }

private:
    bool probe_;
    std::uint64_t max_nodes_;
    double max_seconds_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool tripped_ = false;
};

// Word-level arithmetic for groups of order <= 64.
class Arith {
public:
    explicit Arith(const GroupPtr& group) : group_(*group), spec_(group->spec()), n_(spec_.order()) {
        if (n_ > kMaxOracleOrder) {
            throw std::invalid_argument("oracle searches support groups of order at most 64 (got " +
                                        std::to_string(n_) + ")");
        }
        neg_.resize(n_);
        for (std::uint32_t x = 0; x < n_; ++x) {
            neg_[x] = spec_.neg(Element{x}).index;
        }
    }

    std::uint32_t n() const { return n_; }
    Word full() const { return group_.full_word(); }
    const GroupSpec& spec() const { return spec_; }
    std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }
    Word translate(Word w, std::uint32_t t) const { return group_.translate_word(w, Element{t}); }

    // i * x, tables built up to max_multiple.
    void prepare_multiples(int max_multiple) {
        while (static_cast<int>(mul_.size()) <= max_multiple) {
            const auto i = static_cast<std::int64_t>(mul_.size());
            std::vector<std::uint32_t> row(n_);
            for (std::uint32_t x = 0; x < n_; ++x) {
                row[x] = spec_.scale(i, Element{x}).index;
            }
            mul_.push_back(std::move(row));
        }
    }
    std::uint32_t mul(int i, std::uint32_t x) const { return mul_[static_cast<std::size_t>(i)][x]; }

private:
    const Group& group_;
    const GroupSpec& spec_;
    std::uint32_t n_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::vector<std::uint32_t>> mul_;
};

// ---------------------------------------------------------------------------
// Symmetry: affine maps x -> u x + t with u a unit modulo the exponent.

using Perm = std::vector<std::uint32_t>;

std::vector<std::uint32_t> dilation_units(const GroupSpec& spec) {
    std::vector<std::uint32_t> out = units(spec.exponent());
    if (out.empty()) {
        out.push_back(1);
    }
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::uint32_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::uint32_t> parent_;
};

// Orbits of the elements in `domain` under the maps, ordered by least element.
std::vector<Word> orbits(std::uint32_t n, const std::vector<Perm>& maps, Word domain) {
    UnionFind uf(n);
    for (const Perm& p : maps) {
        for (std::uint32_t x = 0; x < n; ++x) {
            uf.unite(x, p[x]);
        }
    }
    std::vector<Word> by_root(n, 0);
    for (std::uint32_t x : word_elements(domain)) {
        by_root[uf.find(x)] |= bit(x);
    }
    std::vector<Word> out;
    for (const Word w : by_root) {
        if (w != 0) {
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end(), [](Word a, Word b) { return lowest(a) < lowest(b); });
    return out;
}

Perm affine_perm(const GroupSpec& spec, std::uint32_t u, std::uint32_t t) {
    Perm p(spec.order());
    for (std::uint32_t x = 0; x < spec.order(); ++x) {
        p[x] = spec.add(spec.scale(u, Element{x}), Element{t}).index;
    }
    return p;
}

// Maps preserving "target not in h-fold sums": u g + h t = g. With
// fix_zero only pure dilations (t = 0) are allowed.
std::vector<Perm> target_stabilizer(const GroupSpec& spec, int h, std::uint32_t target, bool fix_zero) {
    std::vector<Perm> maps;
    const Element g{target};
    for (const std::uint32_t u : dilation_units(spec)) {
        const Element ug = spec.scale(u, g);
        if (fix_zero) {
            if (ug == g) {
                maps.push_back(affine_perm(spec, u, 0));
            }
            continue;
        }
        for (std::uint32_t t = 0; t < spec.order(); ++t) {
            if (spec.add(ug, spec.scale(h, Element{t})) == g) {
                maps.push_back(affine_perm(spec, u, t));
            }
        }
    }
    return maps;
}

// Target classes under g -> u g + h t (or g -> u g when fix_zero).
std::vector<std::uint32_t> target_representatives(const GroupSpec& spec, int h, bool fix_zero, Word domain) {
    std::vector<Perm> generators;
    for (const std::uint32_t u : dilation_units(spec)) {
        generators.push_back(affine_perm(spec, u, 0));
    }
    if (!fix_zero) {
        for (std::uint32_t t = 0; t < spec.order(); ++t) {
            generators.push_back(affine_perm(spec, 1, spec.scale(h, Element{t}).index));
        }
    }
    std::vector<std::uint32_t> reps;
    for (const Word orbit : orbits(spec.order(), generators, domain)) {
        reps.push_back(lowest(orbit));
    }
    return reps;
}

std::vector<Perm> dilation_perms(const GroupSpec& spec) {
    std::vector<Perm> maps;
    for (const std::uint32_t u : dilation_units(spec)) {
        maps.push_back(affine_perm(spec, u, 0));
    }
    return maps;
}

// ---------------------------------------------------------------------------
// Minimum sumset size over m-subsets.
//
// Layers hold j-fold (restricted) sums of the current partial set for
// j = 0..h. Sumsets only grow as elements are added, so a partial set whose
// h-layer already reaches the best size is pruned.

class MinSearch {
public:
    MinSearch(const Arith& arith, int m, int h, bool restricted, Clock& clock)
        : arith_(arith), m_(m), h_(h), restricted_(restricted), clock_(clock),
          width_(static_cast<std::size_t>(h) + 1), stack_(width_ * (static_cast<std::size_t>(m) + 2), 0),
          best_(static_cast<int>(arith.n()) + 1) {}

    void run() {
        seed();
        Word* root = layer(0);
        root[0] = bit(0);
        Word* with_zero = layer(1);
        add(root, with_zero, 0);
        if (m_ == 1) {
            leaf(with_zero, bit(0));
            return;
        }
        const Word nonzero = arith_.full() & ~bit(0);
        Word excluded = 0;
        for (const Word orbit : orbits(arith_.n(), dilation_perms(arith_.spec()), nonzero)) {
            const std::uint32_t rep = lowest(orbit);
            add(with_zero, layer(2), rep);
            dfs(2, bit(0) | bit(rep), nonzero & ~excluded & ~bit(rep));
            excluded |= orbit;
            if (clock_.tripped() || done()) {
                return;
            }
        }
    }

    int best() const { return best_; }
    Word best_set() const { return best_set_; }

private:
    Word* layer(int depth) { return stack_.data() + static_cast<std::size_t>(depth) * width_; }

    // The interval {0, ..., m-1} gives a starting bound and witness.
    void seed() {
        std::vector<Word> a(width_, 0);
        std::vector<Word> b(width_, 0);
        a[0] = bit(0);
        Word set = 0;
        for (int x = 0; x < m_; ++x) {
            add(a.data(), b.data(), static_cast<std::uint32_t>(x));
            std::swap(a, b);
            set |= bit(static_cast<std::uint32_t>(x));
        }
        leaf(a.data(), set);
    }

    void add(const Word* in, Word* out, std::uint32_t x) const {
        out[0] = in[0];
        if (restricted_) {
            for (int j = h_; j >= 1; --j) {
                out[j] = in[j] | arith_.translate(in[j - 1], x);
            }
        } else {
            for (int j = 1; j <= h_; ++j) {
                out[j] = in[j] | arith_.translate(out[j - 1], x);
            }
        }
    }

    bool done() const {
        // |hA| >= |A| for unrestricted sums.
        return !restricted_ && best_ <= m_;
    }

    void leaf(const Word* layers, Word set) {
        const int size = popcount(layers[h_]);
        if (size < best_) {
            best_ = size;
            best_set_ = set;
        }
    }

    void dfs(int size, Word set, Word remaining) {
        if (!clock_.tick()) {
            return;
        }
        Word* cur = layer(size);
        if (size == m_) {
            leaf(cur, set);
            return;
        }
        if (popcount(cur[h_]) >= best_) {
            return;
        }
        const int need = m_ - size;
        Word* next = layer(size + 1);
        while (remaining != 0) {
            if (popcount(remaining) < need) {
                return;
            }
            const std::uint32_t x = lowest(remaining);
            remaining &= remaining - 1;
            add(cur, next, x);
            dfs(size + 1, set | bit(x), remaining);
            if (clock_.tripped() || done()) {
                return;
            }
        }
    }

    const Arith& arith_;
    int m_;
    int h_;
    bool restricted_;
    Clock& clock_;
    std::size_t width_;
    std::vector<Word> stack_;
    int best_;
    Word best_set_ = 0;
};

SearchResult min_sumset(const GroupPtr& group, int m, int h, bool restricted, const SearchBudget& budget) {
    Arith arith(group);
    const auto n = static_cast<int>(arith.n());
    if (m < 1 || m > n) {
        throw std::invalid_argument("rho: need 1 <= m <= n");
    }
    if (restricted ? (h < 0 || h > m) : h < 1) {
        throw std::invalid_argument(restricted ? "rho_hat: need 0 <= h <= m" : "rho: need h >= 1");
    }
    Clock clock(budget, arith.n());
    MinSearch search(arith, m, h, restricted, clock);
    search.run();

    SearchResult r;
    r.value = search.best();
    WitnessSet w{group->spec()};
    w.quantity = restricted ? "rho_hat" : "rho";
    w.certifies = restricted ? Certificate::restricted_size : Certificate::sumset_size;
    w.h = h;
    w.value = r.value;
    w.elements = word_elements(search.best_set());
    clock.finish(r);
    w.exact = r.exhaustive;
    r.witness = std::move(w);
    return r;
}

// ---------------------------------------------------------------------------
// Maximum member of a downward-closed family, by branch and bound.
//
// A policy describes the family through a fixed-width state of words:
//   init(state)                  state of the empty set
//   add(in, out, x)              state after adding x
//   allowed(state, set, cand)    members y of cand with set + {y} in the family

template <class Policy>
class MaxSearch {
public:
    MaxSearch(const Policy& policy, std::uint32_t n, Clock& clock, int initial_best)
        : policy_(policy), clock_(clock), width_(policy.width()),
          stack_(width_ * (static_cast<std::size_t>(n) + 2), 0), best_(initial_best) {}

    // Root branching over orbits of a symmetry group of the family: the
    // first orbit a set meets can be assumed to contribute its least element.
    void run(const std::vector<Word>& root_orbits, Word pool) {
        Word* root = layer(0);
        policy_.init(root);
        Word excluded = 0;
        for (const Word orbit : root_orbits) {
            const Word usable = orbit & pool;
            if (usable == 0) {
                continue;
            }
            const std::uint32_t rep = lowest(usable);
            const Word cand = pool & ~excluded & ~bit(rep);
            excluded |= orbit;
            if (1 + popcount(cand) <= best_) {
                continue;
            }
            if (policy_.allowed(root, 0, bit(rep)) == 0) {
                continue;
            }
            Word* next = layer(1);
            policy_.add(root, next, rep);
            expand(1, bit(rep), 1, policy_.allowed(next, bit(rep), cand));
            if (clock_.tripped()) {
                return;
            }
        }
    }

    int best() const { return best_; }
    Word best_set() const { return best_set_; }
    bool improved() const { return improved_; }

private:
    Word* layer(int depth) { return stack_.data() + static_cast<std::size_t>(depth) * width_; }

    void expand(int depth, Word set, int size, Word cand) {
        if (!clock_.tick()) {
            return;
        }
        if (size > best_) {
            best_ = size;
            best_set_ = set;
            improved_ = true;
        }
        Word* cur = layer(depth);
        Word* next = layer(depth + 1);
        while (cand != 0) {
            if (size + popcount(cand) <= best_) {
                return;
            }
            const std::uint32_t x = lowest(cand);
            cand &= cand - 1;
            policy_.add(cur, next, x);
            const Word grown = set | bit(x);
            expand(depth + 1, grown, size + 1, policy_.allowed(next, grown, cand));
            if (clock_.tripped()) {
                return;
            }
        }
    }

    const Policy& policy_;
    Clock& clock_;
    std::size_t width_;
    std::vector<Word> stack_;
    int best_;
    Word best_set_ = 0;
    bool improved_ = false;
};

// F_j = target - jA for j < h. y may join iff i*y is outside F_{h-i}
// for every i in 1..h.
class UnrestrictedDeficient {
public:
    UnrestrictedDeficient(Arith& arith, int h, std::uint32_t target) : arith_(arith), h_(h), target_(target) {
        arith.prepare_multiples(h);
    }
    std::size_t width() const { return static_cast<std::size_t>(h_); }
    void init(Word* s) const {
        std::fill(s, s + h_, Word{0});
        s[0] = bit(target_);
    }
    void add(const Word* in, Word* out, std::uint32_t x) const {
        const std::uint32_t minus_x = arith_.neg(x);
        out[0] = in[0];
        for (int j = 1; j < h_; ++j) {
            out[j] = in[j] | arith_.translate(out[j - 1], minus_x);
        }
    }
    Word allowed(const Word* s, Word /*set*/, Word cand) const {
        Word keep = cand & ~s[h_ - 1];
        if (h_ == 1) {
            return keep;
        }
        Word out = keep;
        for (Word w = keep; w != 0; w &= w - 1) {
            const std::uint32_t y = lowest(w);
            for (int i = 2; i <= h_; ++i) {
                if ((s[h_ - i] >> arith_.mul(i, y)) & 1U) {
                    out &= ~bit(y);
                    break;
                }
            }
        }
        return out;
    }

private:
    const Arith& arith_;
    int h_;
    std::uint32_t target_;
};

// F_j = target - j^A for j < h; y may join iff y is outside F_{h-1}.
class RestrictedDeficient {
public:
    RestrictedDeficient(const Arith& arith, int h, std::uint32_t target) : arith_(arith), h_(h), target_(target) {}
    std::size_t width() const { return static_cast<std::size_t>(h_); }
    void init(Word* s) const {
        std::fill(s, s + h_, Word{0});
        s[0] = bit(target_);
    }
    void add(const Word* in, Word* out, std::uint32_t x) const {
        const std::uint32_t minus_x = arith_.neg(x);
        for (int j = h_ - 1; j >= 1; --j) {
            out[j] = in[j] | arith_.translate(in[j - 1], minus_x);
        }
        out[0] = in[0];
    }
    Word allowed(const Word* s, Word /*set*/, Word cand) const { return cand & ~s[h_ - 1]; }

private:
    const Arith& arith_;
    int h_;
    std::uint32_t target_;
};

// F = target - Sigma A.
class SigmaDeficient {
public:
    SigmaDeficient(const Arith& arith, std::uint32_t target) : arith_(arith), target_(target) {}
    std::size_t width() const { return 1; }
    void init(Word* s) const { s[0] = bit(target_); }
    void add(const Word* in, Word* out, std::uint32_t x) const {
        out[0] = in[0] | arith_.translate(in[0], arith_.neg(x));
    }
    Word allowed(const Word* s, Word /*set*/, Word cand) const { return cand & ~s[0]; }

private:
    const Arith& arith_;
    std::uint32_t target_;
};

// S_j = jA for j = 0..k; the family is {A : kA and A disjoint}.
class KFoldFree {
public:
    KFoldFree(Arith& arith, int k) : arith_(arith), k_(k) { arith.prepare_multiples(k); }
    std::size_t width() const { return static_cast<std::size_t>(k_) + 1; }
    void init(Word* s) const {
        std::fill(s, s + k_ + 1, Word{0});
        s[0] = bit(0);
    }
    void add(const Word* in, Word* out, std::uint32_t x) const {
        out[0] = in[0];
        for (int j = 1; j <= k_; ++j) {
            out[j] = in[j] | arith_.translate(out[j - 1], x);
        }
    }
    Word allowed(const Word* s, Word set, Word cand) const {
        Word out = cand & ~s[k_];
        for (Word w = out; w != 0; w &= w - 1) {
            const std::uint32_t y = lowest(w);
            const Word grown = set | bit(y);
            Word sums = s[k_];
            for (int i = 1; i <= k_ && (sums & grown) == 0; ++i) {
                sums |= arith_.translate(s[k_ - i], arith_.mul(i, y));
            }
            if ((sums & grown) != 0) {
                out &= ~bit(y);
            }
        }
        return out;
    }

private:
    const Arith& arith_;
    int k_;
};

struct MaxOutcome {
    int best = 0;
    Word best_set = 0;
    bool improved = false;
};

template <class Policy>
MaxOutcome run_max(const Policy& policy, std::uint32_t n, Clock& clock, int initial_best,
                   const std::vector<Word>& root_orbits, Word pool) {
    MaxSearch<Policy> search(policy, n, clock, initial_best);
    search.run(root_orbits, pool);
    return {search.best(), search.best_set(), search.improved()};
}

MaxOutcome deficient_search(Arith& arith, const DeficientQuery& q, Clock& clock, int initial_best) {
    const GroupSpec& spec = arith.spec();
    Word pool = arith.full();
    if (q.exclude_zero) {
        pool &= ~bit(0);
    }
    const auto root_orbits = orbits(arith.n(), target_stabilizer(spec, q.h, q.target.index, q.exclude_zero), pool);
    if (q.restricted) {
        return run_max(RestrictedDeficient(arith, q.h, q.target.index), arith.n(), clock, initial_best, root_orbits,
                       pool);
    }
    return run_max(UnrestrictedDeficient(arith, q.h, q.target.index), arith.n(), clock, initial_best, root_orbits,
                   pool);
}

WitnessSet deficient_witness(const GroupPtr& group, const DeficientQuery& q, Word set, bool exact) {
    WitnessSet w{group->spec()};
    w.quantity = q.restricted ? (q.exclude_zero ? "chi_hat_star" : "chi_hat") : (q.exclude_zero ? "chi_star" : "chi");
    w.certifies = q.restricted ? Certificate::restricted_deficient : Certificate::sumset_deficient;
    w.h = q.h;
    w.g = q.target.index;
    w.elements = word_elements(set);
    w.value = static_cast<std::int64_t>(w.elements.size()) + 1;
    w.exact = exact;
    return w;
}

CriticalSearch critical_search(const GroupPtr& group, int h, bool restricted, bool star,
                               const SearchBudget& budget) {
    Arith arith(group);
    const GroupSpec& spec = arith.spec();
    if (h < 1) {
        throw std::invalid_argument("chi: h must be >= 1");
    }
    Clock clock(budget, arith.n());

    const auto reps = target_representatives(spec, h, star, arith.full());
    int best = 0;
    Word best_set = 0;
    std::uint32_t best_target = reps.front();
    for (const std::uint32_t g : reps) {
        const DeficientQuery q{h, restricted, Element{g}, star};
        const MaxOutcome outcome = deficient_search(arith, q, clock, best);
        if (outcome.improved) {
            best = outcome.best;
            best_set = outcome.best_set;
            best_target = g;
        }
        if (clock.tripped()) {
            break;
        }
    }

    CriticalSearch out;
    out.targets = static_cast<std::uint32_t>(reps.size());
    clock.finish(out.detail);
    out.detail.value = best;
    out.detail.witness = deficient_witness(group, {h, restricted, Element{best_target}, star}, best_set,
                                           out.detail.exhaustive);

    CriticalValue& cv = out.value;
    cv.quantity = restricted ? (star ? Quantity::chi_hat_star : Quantity::chi_hat)
                             : (star ? Quantity::chi_star : Quantity::chi);
    cv.source = Source::oracle;
    cv.group = spec.to_string();
    const int pool_size = static_cast<int>(arith.n()) - (star ? 1 : 0);
    if (best >= pool_size) {
        // Every admissible set, including the largest, misses a target.
        cv.kind = ValueKind::undefined;
        cv.case_tag = "no_m_suffices";
    } else {
        cv.value = best + 1;
        cv.kind = out.detail.exhaustive ? ValueKind::exact : ValueKind::lower_bound;
        cv.case_tag = "deficient_search";
    }
    return out;
}

}  // namespace

SearchResult rho_exact(const GroupPtr& group, int m, int h, const SearchBudget& budget) {
    return min_sumset(group, m, h, false, budget);
}

SearchResult rho_hat_exact(const GroupPtr& group, int m, int h, const SearchBudget& budget) {
    return min_sumset(group, m, h, true, budget);
}

SearchResult max_deficient(const GroupPtr& group, const DeficientQuery& query, const SearchBudget& budget) {
    Arith arith(group);
    if (query.h < 1) {
        throw std::invalid_argument("max_deficient: h must be >= 1");
    }
    if (!arith.spec().contains(query.target)) {
        throw std::invalid_argument("max_deficient: target out of range");
    }
    Clock clock(budget, arith.n());
    const MaxOutcome outcome = deficient_search(arith, query, clock, 0);
    SearchResult r;
    clock.finish(r);
    r.value = outcome.best;
    r.witness = deficient_witness(group, query, outcome.best_set, r.exhaustive);
    return r;
}

CriticalSearch chi_exact(const GroupPtr& group, int h, const SearchBudget& budget, bool star) {
    return critical_search(group, h, false, star, budget);
}

CriticalSearch chi_hat_exact(const GroupPtr& group, int h, const SearchBudget& budget, bool star) {
    return critical_search(group, h, true, star, budget);
}

SearchResult sigma_critical_exact(const GroupPtr& group, const SearchBudget& budget) {
    Arith arith(group);
    const GroupSpec& spec = arith.spec();
    if (arith.n() < 2) {
        throw std::invalid_argument("sigma_critical_exact: need n >= 2");
    }
    Clock clock(budget, arith.n());
    const Word nonzero = arith.full() & ~bit(0);
    int best = 0;
    Word best_set = 0;
    std::uint32_t best_target = 0;
    for (const std::uint32_t g : target_representatives(spec, 1, true, nonzero)) {
        std::vector<Perm> maps;
        for (const std::uint32_t u : dilation_units(spec)) {
            if (spec.scale(u, Element{g}) == Element{g}) {
                maps.push_back(affine_perm(spec, u, 0));
            }
        }
        const MaxOutcome outcome =
            run_max(SigmaDeficient(arith, g), arith.n(), clock, best, orbits(arith.n(), maps, nonzero), nonzero);
        if (outcome.improved || best_target == 0) {
            best = outcome.best;
            best_set = outcome.best_set;
            best_target = g;
        }
        if (clock.tripped()) {
            break;
        }
    }
    SearchResult r;
    clock.finish(r);
    r.value = best + 1;
    WitnessSet w{spec};
    w.quantity = "classical_critical";
    w.certifies = Certificate::sigma_deficient;
    w.g = best_target;
    w.elements = word_elements(best_set);
    w.value = r.value;
    w.exact = r.exhaustive;
    r.witness = std::move(w);
    return r;
}

namespace {

SearchResult max_k_fold_free(std::uint32_t n, int k, const SearchBudget& budget) {
    if (n < 2) {
        throw std::invalid_argument("sum-free search: need n >= 2");
    }
    const GroupPtr group = Group::cyclic(n);
    Arith arith(group);
    Clock clock(budget, n);
    const auto root_orbits = orbits(n, dilation_perms(arith.spec()), arith.full());
    const MaxOutcome outcome = run_max(KFoldFree(arith, k), n, clock, 0, root_orbits, arith.full());
    SearchResult r;
    clock.finish(r);
    r.value = outcome.best;
    WitnessSet w{group->spec()};
    w.quantity = k == 2 ? "sum_free" : "three_one_sum_free";
    w.certifies = k == 2 ? Certificate::sum_free : Certificate::three_one_sum_free;
    w.h = k;
    w.elements = word_elements(outcome.best_set);
    w.value = r.value;
    w.exact = r.exhaustive;
    r.witness = std::move(w);
    return r;
}

}  // namespace

SearchResult max_sum_free(std::uint32_t n, const SearchBudget& budget) {
    return max_k_fold_free(n, 2, budget);
}

SearchResult max_three_one_sum_free(std::uint32_t n, const SearchBudget& budget) {
    return max_k_fold_free(n, 3, budget);
}

// ---------------------------------------------------------------------------

WitnessSet construct_coset_stripe(std::uint32_t n, int h, std::uint32_t d) {
    if (n < 2 || h < 1) {
        throw std::invalid_argument("coset_stripe: need n >= 2 and h >= 1");
    }
    if (d == 0) {
        std::int64_t best = -1;
        for (const std::uint64_t du : divisors(n).divisors) {
            const auto dd = static_cast<std::int64_t>(du);
            const std::int64_t size = (floor_div(dd - 2, h) + 1) * (n / dd);
            if (size > best) {
                best = size;
                d = static_cast<std::uint32_t>(dd);
            }
        }
    }
    if (n % d != 0) {
        throw std::invalid_argument("coset_stripe: d must divide n");
    }
    const std::int64_t stripes = floor_div(static_cast<std::int64_t>(d) - 2, h) + 1;
    WitnessSet w{GroupSpec::cyclic(n)};
    w.quantity = "chi";
    w.certifies = Certificate::sumset_deficient;
    w.h = h;
    w.g = d - 1;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (static_cast<std::int64_t>(x % d) < stripes) {
            w.elements.push_back(x);
        }
    }
    w.value = static_cast<std::int64_t>(w.elements.size()) + 1;
    return w;
}

WitnessSet construct_two_torsion_plus_halforbit(const GroupPtr& group) {
    const GroupSpec& spec = group->spec();
    if (spec.is_elementary_two_group()) {
        throw std::invalid_argument("two_torsion_plus_halforbit: group has exponent 2");
    }
    WitnessSet w{spec};
    w.quantity = "chi_hat";
    w.certifies = Certificate::restricted_deficient;
    w.h = 2;
    w.g = 0;
    for (std::uint32_t x = 0; x < spec.order(); ++x) {
        // L, plus the smaller-indexed member of each pair {x, -x}
        if (x <= spec.neg(Element{x}).index) {
            w.elements.push_back(x);
        }
    }
    w.value = static_cast<std::int64_t>(w.elements.size()) + 1;
    return w;
}

WitnessSet construct_even_elements(std::uint32_t n, int h) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("even_elements: n must be even");
    }
    if (h < 1) {
        throw std::invalid_argument("even_elements: h must be >= 1");
    }
    WitnessSet w{GroupSpec::cyclic(n)};
    w.quantity = "chi_hat";
    w.certifies = Certificate::restricted_deficient;
    w.h = h;
    w.g = 1;
    for (std::uint32_t x = 0; x < n; x += 2) {
        w.elements.push_back(x);
    }
    w.value = static_cast<std::int64_t>(w.elements.size()) + 1;
    return w;
}

}  // namespace critnum
