#ifndef BICOLOR_CENSUS_HPP
#define BICOLOR_CENSUS_HPP

#include <functional>

#include "bicolor/graph.hpp"

namespace bicolor {

/// One row of the census table: counts[b] is the number of connected
/// minimal graphs with n vertices of which b are black.
struct CensusRow {
    int n = 0;
    std::vector<long long> counts;  // indexed by b = 0..n
    long long total = 0;
};

struct CensusOptions {
    int jobs = 0;  // 0 = hardware concurrency
    /// When set, receives one canonical representative per isomorphism
    /// class, in a deterministic order.
    std::function<void(const BicoloredGraph&)> callback;
};

/// Exhaustive count over all labeled simple-with-loops graphs, divided by
/// b!*(n-b)!. Exact divisibility is asserted. n is guarded to 1..6.
CensusRow enumerate_minimal(int n, const CensusOptions& options = {});

/// Single table entry.
long long enumerate_minimal_count(int n, int b, const CensusOptions& options = {});

/// Sum of row totals for n = 1..N. Guarded to 1..6.
long long cumulative_qi_classes(int N, int jobs = 0);

}  // namespace bicolor

#endif
