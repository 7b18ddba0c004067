#include "bicolor/census.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <thread>

namespace bicolor {

namespace {

constexpr int kMaxN = 6;

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Edge universe for n vertices: all unordered pairs (i,j) with i <= j,
// loops included, in lexicographic order. n <= 6 gives at most 21 bits.
struct PairTable {
    int n = 0;
    int bits = 0;
    std::array<std::pair<int, int>, 21> pairs{};

    explicit PairTable(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs[static_cast<size_t>(bits++)] = {i, j};
    }
};

struct SmallGraph {
    uint8_t adj[kMaxN] = {};  // neighbor masks, self excluded
    uint8_t loops = 0;
};

SmallGraph decode(const PairTable& table, uint32_t mask) {
    SmallGraph g;
    while (mask) {
        int k = __builtin_ctz(mask);
        mask &= mask - 1;
        auto [i, j] = table.pairs[static_cast<size_t>(k)];
        if (i == j) {
            g.loops |= static_cast<uint8_t>(1u << i);
        } else {
            g.adj[i] |= static_cast<uint8_t>(1u << j);
            g.adj[j] |= static_cast<uint8_t>(1u << i);
        }
    }
    return g;
}

bool connected_small(int n, const SmallGraph& g) {
    uint8_t reached = 1;
    for (;;) {
        uint8_t next = reached;
        uint8_t m = reached;
        while (m) {
            int v = __builtin_ctz(m);
            m &= static_cast<uint8_t>(m - 1);
            next |= g.adj[v];
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == (1u << n) - 1u;
}

// Discreteness of the coarsest stable partition, specialized to n <= 6.
bool minimal_small(int n, const SmallGraph& g, int blacks) {
    uint8_t cls[kMaxN];
    int count = (blacks == 0 || blacks == n) ? 1 : 2;
    for (int v = 0; v < n; ++v) cls[v] = (v < blacks || blacks == 0) ? 0 : 1;

    for (;;) {
        uint16_t sig[kMaxN];
        for (int v = 0; v < n; ++v) {
            uint8_t adjmask = (g.loops >> v) & 1u ? static_cast<uint8_t>(1u << cls[v]) : 0u;
            uint8_t m = g.adj[v];
            while (m) {
                int w = __builtin_ctz(m);
                m &= static_cast<uint8_t>(m - 1);
                adjmask |= static_cast<uint8_t>(1u << cls[w]);
            }
            sig[v] = static_cast<uint16_t>((cls[v] << 8) | adjmask);
        }
        uint16_t seen[kMaxN];
        int next_count = 0;
        uint8_t next_cls[kMaxN];
        for (int v = 0; v < n; ++v) {
            int id = -1;
            for (int k = 0; k < next_count; ++k)
                if (seen[k] == sig[v]) {
                    id = k;
                    break;
                }
            if (id < 0) {
                id = next_count;
                seen[next_count++] = sig[v];
            }
            next_cls[v] = static_cast<uint8_t>(id);
        }
        if (next_count == count) return count == n;
        count = next_count;
        for (int v = 0; v < n; ++v) cls[v] = next_cls[v];
    }
}

BicoloredGraph build_graph(int n, int blacks, const PairTable& table, uint32_t mask) {
    std::vector<Color> colors(static_cast<size_t>(n), Color::White);
    for (int v = 0; v < blacks; ++v) colors[static_cast<size_t>(v)] = Color::Black;
    BicoloredGraph g(colors);
    while (mask) {
        int k = __builtin_ctz(mask);
        mask &= mask - 1;
        g.add_edge(table.pairs[static_cast<size_t>(k)].first, table.pairs[static_cast<size_t>(k)].second);
    }
    return g;
}

struct ShardResult {
    long long labeled = 0;
    std::vector<uint32_t> reps;  // masks of canonical representatives
};

ShardResult scan_range(int n, int blacks, const PairTable& table, uint32_t lo, uint32_t hi,
                       bool collect) {
    ShardResult out;
    for (uint32_t mask = lo; mask < hi; ++mask) {
        if (n == 1 && mask == 0) continue;  // the census omits the edgeless 1-vertex graphs
        SmallGraph g = decode(table, mask);
        if (!connected_small(n, g)) continue;
        if (!minimal_small(n, g, blacks)) continue;
        ++out.labeled;
        if (collect) {
            BicoloredGraph bg = build_graph(n, blacks, table, mask);
            if (canonical_form(bg) == bg) out.reps.push_back(mask);
        }
    }
    return out;
}

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Labeled count (and optionally the canonical representatives) for one
// (n, b) cell, sharded over contiguous mask ranges.
ShardResult scan_cell(int n, int blacks, int jobs, bool collect) {
    PairTable table(n);
    uint32_t total = 1u << table.bits;
    int workers = std::min<int>(effective_jobs(jobs), 64);
    if (total < 1024) workers = 1;

    std::vector<ShardResult> results(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    uint32_t per = total / static_cast<uint32_t>(workers);
    for (int w = 0; w < workers; ++w) {
        uint32_t lo = per * static_cast<uint32_t>(w);
        uint32_t hi = (w == workers - 1) ? total : lo + per;
        threads.emplace_back([&, w, lo, hi]() { results[static_cast<size_t>(w)] = scan_range(n, blacks, table, lo, hi, collect); });
    }
    for (auto& t : threads) t.join();

    ShardResult merged;
    for (auto& r : results) {
        merged.labeled += r.labeled;
        merged.reps.insert(merged.reps.end(), r.reps.begin(), r.reps.end());
    }
    return merged;
}

long long divide_exactly(long long labeled, int n, int blacks) {
    long long divisor = factorial(blacks) * factorial(n - blacks);
    if (labeled % divisor != 0)
        throw std::logic_error("census divisibility failed: a minimal graph has automorphisms");
    return labeled / divisor;
}

void check_n(int n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("census supports 1 <= n <= 6 (larger rows are out of desk scale)");
}

}  // namespace

CensusRow enumerate_minimal(int n, const CensusOptions& options) {
    check_n(n);
    bool collect = static_cast<bool>(options.callback);
    CensusRow row;
    row.n = n;
    row.counts.assign(static_cast<size_t>(n) + 1, 0);

    std::vector<std::vector<uint32_t>> reps(static_cast<size_t>(n) + 1);
    for (int b = 0; b <= n; ++b) {
        if (!collect && b > n - b) {
            row.counts[static_cast<size_t>(b)] = row.counts[static_cast<size_t>(n - b)];
            continue;
        }
        ShardResult r = scan_cell(n, b, options.jobs, collect);
        row.counts[static_cast<size_t>(b)] = divide_exactly(r.labeled, n, b);
        if (collect) {
            if (static_cast<long long>(r.reps.size()) != row.counts[static_cast<size_t>(b)])
                throw std::logic_error("census representative count does not match the table entry");
            reps[static_cast<size_t>(b)] = std::move(r.reps);
        }
    }
    for (long long c : row.counts) row.total += c;

    if (collect) {
        PairTable table(n);
        for (int b = 0; b <= n; ++b) {
            std::sort(reps[static_cast<size_t>(b)].begin(), reps[static_cast<size_t>(b)].end());
            for (uint32_t mask : reps[static_cast<size_t>(b)])
                options.callback(build_graph(n, b, table, mask));
        }
    }
    return row;
}

long long enumerate_minimal_count(int n, int b, const CensusOptions& options) {
    check_n(n);
    if (b < 0 || b > n) throw std::invalid_argument("black count out of range");
    if (options.callback) {
        ShardResult r = scan_cell(n, b, options.jobs, true);
        long long count = divide_exactly(r.labeled, n, b);
        if (static_cast<long long>(r.reps.size()) != count)
            throw std::logic_error("census representative count does not match the table entry");
        std::sort(r.reps.begin(), r.reps.end());
        PairTable table(n);
        for (uint32_t mask : r.reps) options.callback(build_graph(n, b, table, mask));
        return count;
    }
    int cell = std::min(b, n - b);
    return divide_exactly(scan_cell(n, cell, options.jobs, false).labeled, n, cell);
}

long long cumulative_qi_classes(int N, int jobs) {
    check_n(N);
    long long total = 0;
    CensusOptions opts;
    opts.jobs = jobs;
    for (int n = 1; n <= N; ++n) total += enumerate_minimal(n, opts).total;
    return total;
}

}  // namespace bicolor
