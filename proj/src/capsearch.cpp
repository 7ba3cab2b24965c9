#include "capset/capsearch.hpp"

#include "capset/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace capset {

std::uint32_t complete_triple(std::uint32_t a, std::uint32_t b, int n) {
    std::uint32_t c = 0, scale = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t da = a % 3, db = b % 3;
        c += ((6 - da - db) % 3) * scale;
        a /= 3;
        b /= 3;
        scale *= 3;
    }
    return c;
}

bool is_progression_free(const CapSet& set) {
    if (set.p() != 3) throw UnsupportedError("is_progression_free: only F_3^n is supported");
    const auto& codes = set.codes();
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            // the completing point differs from both since codes[i] != codes[j]
            if (set.contains(complete_triple(codes[i], codes[j], set.n()))) return false;
        }
    return true;
}

namespace {

constexpr int kMaxDim = 5;
constexpr std::size_t kWords = 4;  // 3^5 = 243 <= 256

class PointMask {
public:
    void set(unsigned i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(unsigned i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(unsigned i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    unsigned first() const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (words_[k]) return static_cast<unsigned>(k * 64 + std::countr_zero(words_[k]));
        return kWords * 64;
    }
    PointMask operator|(const PointMask& o) const {
        PointMask r;
        for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

// A cap meets every affine k-flat in at most cap(k) points. Along a flag of coordinate flats
// (lines inside planes inside 3-flats ...) this gives the nested bound
//   bound(flat) = min(cap(k), sum of bound over its three parallel sub-flats).
class FlatBound {
public:
    FlatBound(int n, std::vector<int> small_caps) : n_(n), caps_(std::move(small_caps)) {
        unsigned lines = 1;
        for (int i = 1; i < n; ++i) lines *= 3;
        // One flag per choice of line direction; the other coordinates nest in cyclic order.
        for (int shift = 0; shift < n; ++shift) {
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = (i + shift + 1) % n;
            std::vector<std::array<std::uint16_t, 3>> flag(lines);
            std::vector<unsigned> coord(static_cast<std::size_t>(n));
            for (unsigned line = 0; line < lines; ++line) {
                unsigned rest = line;
                for (int i = n - 2; i >= 0; --i) {
                    coord[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = rest % 3;
                    rest /= 3;
                }
                for (unsigned v = 0; v < 3; ++v) {
                    coord[static_cast<std::size_t>(order[static_cast<std::size_t>(n - 1)])] = v;
                    unsigned code = 0;
                    for (int i = 0; i < n; ++i) code = code * 3 + coord[static_cast<std::size_t>(i)];
                    flag[line][v] = static_cast<std::uint16_t>(code);
                }
            }
            flags_.push_back(std::move(flag));
        }
    }

    int operator()(const PointMask& avail) const {
        int best = 1 << 20;
        std::array<int, 81> level{};
        for (const auto& flag : flags_) {
            std::size_t width = flag.size();
            for (std::size_t line = 0; line < width; ++line) {
                const int c = avail.test(flag[line][0]) + avail.test(flag[line][1]) + avail.test(flag[line][2]);
                level[line] = std::min(c, 2);  // three collinear points sum to zero
            }
            for (int k = 2; k <= n_; ++k) {
                width /= 3;
                const int cap = k < static_cast<int>(caps_.size()) ? caps_[static_cast<std::size_t>(k)] : 1 << 20;
                for (std::size_t f = 0; f < width; ++f)
                    level[f] = std::min(cap, level[3 * f] + level[3 * f + 1] + level[3 * f + 2]);
            }
            best = std::min(best, level[0]);
        }
        return best;
    }

private:
    int n_;
    std::vector<int> caps_;  // caps_[k] = largest cap in F_3^k, for k < n
    std::vector<std::vector<std::array<std::uint16_t, 3>>> flags_;
};

struct Shared {
    std::atomic<int> best{1};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::optional<std::uint64_t> budget;
    bool keep_ties = false;
};

using TripleTable = std::vector<std::vector<std::uint16_t>>;

class BranchSearch {
public:
    BranchSearch(const TripleTable& third, const FlatBound& flats, Shared& shared)
        : third_(third), flats_(flats), shared_(shared) {}

    void run(std::vector<unsigned>& current, const PointMask& chosen, PointMask candidates) {
        if (shared_.aborted.load(std::memory_order_relaxed)) return;
        const auto nodes = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.budget && nodes > *shared_.budget) {
            shared_.aborted = true;
            return;
        }
        const int size = static_cast<int>(current.size());
        if (size > local_best_) {
            local_best_ = size;
            best_set_ = current;
            int seen = shared_.best.load();
            while (seen < size && !shared_.best.compare_exchange_weak(seen, size)) {
            }
        }
        while (!candidates.none()) {
            // With several workers a branch may not prune on a tie with another branch, so that
            // it still finds its own lexicographically first maximum.
            const int global = shared_.best.load(std::memory_order_relaxed);
            const int target = std::max(local_best_, shared_.keep_ties ? global - 1 : global);
            if (size + candidates.count() <= target) return;
            if (flats_(chosen | candidates) <= target) return;

            const unsigned x = candidates.first();
            candidates.reset(x);
            PointMask next = candidates;
            for (unsigned y : current) next.reset(third_[x][y]);
            PointMask next_chosen = chosen;
            next_chosen.set(x);
            current.push_back(x);
            run(current, next_chosen, next);
            current.pop_back();
            if (shared_.aborted.load(std::memory_order_relaxed)) return;
        }
    }

    int best() const { return local_best_; }
    const std::vector<unsigned>& best_set() const { return best_set_; }

private:
    const TripleTable& third_;
    const FlatBound& flats_;
    Shared& shared_;
    int local_best_ = 0;
    std::vector<unsigned> best_set_;
};

// Exact largest cap sizes for the flat bound, memoized across calls.
int small_cap(int k) {
    static std::mutex mutex;
    static std::map<int, int> known;
    {
        std::lock_guard lock(mutex);
        if (auto it = known.find(k); it != known.end()) return it->second;
    }
    const int value = max_capset(k).max_size;
    std::lock_guard lock(mutex);
    known[k] = value;
    return value;
}

}  // namespace

SearchResult max_capset(int n, const SearchOptions& options) {
    if (n <= 0) throw DomainError("max_capset: n must be positive, got " + std::to_string(n));
    if (n > kMaxDim) throw UnsupportedError("max_capset: n > 5 is out of range for exhaustive search");

    unsigned size = 1;
    for (int i = 0; i < n; ++i) size *= 3;

    TripleTable third(size, std::vector<std::uint16_t>(size));
    for (unsigned a = 0; a < size; ++a)
        for (unsigned b = 0; b < size; ++b) third[a][b] = static_cast<std::uint16_t>(complete_triple(a, b, n));

    std::vector<int> small_caps{1};
    for (int k = 1; k < n; ++k) small_caps.push_back(small_cap(k));
    const FlatBound flats(n, small_caps);

    const unsigned threads = std::max(1u, options.threads);
    Shared shared;
    shared.budget = options.node_budget;
    shared.keep_ties = threads > 1;

    // Affine maps act transitively on ordered triples of non-collinear points, and any three
    // points of a cap are non-collinear. So every cap of size >= 3 has an image containing the
    // codes 0, 1 and 3 (origin, e_n, e_(n-1)). No cap contains 0, 1 and 2, so sets starting with
    // 0, 1, 3 are also lexicographically first: the witness is the least maximum set overall.
    const std::vector<unsigned> prefix = (n == 1) ? std::vector<unsigned>{0, 1} : std::vector<unsigned>{0, 1, 3};
    PointMask open;
    for (unsigned t = prefix.back() + 1; t < size; ++t) open.set(t);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        for (std::size_t j = i + 1; j < prefix.size(); ++j) open.reset(third[prefix[i]][prefix[j]]);
    shared.best = static_cast<int>(prefix.size());

    // Branch b holds the sets whose first point after the prefix is firsts[b].
    std::vector<unsigned> firsts;
    for (unsigned t = prefix.back() + 1; t < size; ++t)
        if (open.test(t)) firsts.push_back(t);

    struct Branch {
        int best = 0;
        std::vector<unsigned> set;
    };
    std::vector<Branch> branches(firsts.size());
    std::atomic<std::size_t> next_branch{0};

    auto worker = [&] {
        for (std::size_t b = next_branch++; b < firsts.size(); b = next_branch++) {
            const unsigned x = firsts[b];
            PointMask candidates;
            for (unsigned t = x + 1; t < size; ++t)
                if (open.test(t)) candidates.set(t);
            for (unsigned y : prefix) candidates.reset(third[x][y]);
            std::vector<unsigned> current = prefix;
            current.push_back(x);
            PointMask chosen;
            for (unsigned y : current) chosen.set(y);
            BranchSearch search(third, flats, shared);
            search.run(current, chosen, candidates);
            branches[b] = {search.best(), search.best_set()};
            if (shared.aborted) return;
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    SearchResult result;
    result.n = n;
    result.max_size = static_cast<int>(prefix.size());
    std::vector<std::uint32_t> witness(prefix.begin(), prefix.end());
    // First branch wins ties: branches are in lexicographic order.
    for (const auto& branch : branches) {
        if (branch.best > result.max_size) {
            result.max_size = branch.best;
            witness.assign(branch.set.begin(), branch.set.end());
        }
    }
    result.witness = CapSet(3, n, std::move(witness));
    result.nodes_explored = shared.nodes.load();
    result.proven_optimal = !shared.aborted;
    return result;
}

}  // namespace capset
