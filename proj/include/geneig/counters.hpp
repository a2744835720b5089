#ifndef GENEIG_COUNTERS_HPP
#define GENEIG_COUNTERS_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>

namespace geneig {

/// Process-wide operation counters, reported by the pipeline and the bench
/// harness. Relaxed atomics: totals are exact, ordering is irrelevant.
struct OpCounters {
    std::atomic<std::uint64_t> mat_vec{0};
    std::atomic<std::uint64_t> mat_mat{0};
    std::atomic<std::uint64_t> max_bits{0};

    void reset()
    {
        mat_vec = 0;
        mat_mat = 0;
        max_bits = 0;
    }

    void note_bits(std::uint64_t bits)
    {
        std::uint64_t cur = max_bits.load(std::memory_order_relaxed);
        while (bits > cur && !max_bits.compare_exchange_weak(cur, bits, std::memory_order_relaxed)) {
        }
    }
};

inline OpCounters& counters()
{
    static OpCounters c;
    return c;
}

} // namespace geneig

#endif // GENEIG_COUNTERS_HPP
