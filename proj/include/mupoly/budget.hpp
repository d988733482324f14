#pragma once

#include "mupoly/errors.hpp"

#include <chrono>
#include <cstdint>

namespace mupoly {

// Resource limits shared by the enumeration-flavoured operations. Point and
// subset caps are hard counts; the time cap (seconds, 0 = off) is checked
// opportunistically inside long loops. A Budget is cheap to copy; counters are
// per-instance so independent operations meter independently unless the caller
// passes the same object through.
struct Budget {
    static constexpr std::int64_t kDefaultPointCap = 10'000'000;
    static constexpr std::int64_t kDefaultSubsetCap = 10'000'000;

    std::int64_t point_cap = kDefaultPointCap;
    std::int64_t subset_cap = kDefaultSubsetCap;
    double time_cap_seconds = 0.0;

    std::int64_t points_seen = 0;
    std::int64_t subsets_seen = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void charge_point(std::int64_t n = 1) {
        points_seen += n;
        if (points_seen > point_cap)
            throw BudgetExceeded("point cap " + std::to_string(point_cap) + " reached", points_seen);
        check_time();
    }

    void charge_subset(std::int64_t n = 1) {
        subsets_seen += n;
        if (subsets_seen > subset_cap)
            throw BudgetExceeded("subset cap " + std::to_string(subset_cap) + " reached", subsets_seen);
        check_time();
    }

    void check_time() const {
        if (time_cap_seconds <= 0.0) return;
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > time_cap_seconds)
            throw BudgetExceeded("time cap " + std::to_string(time_cap_seconds) + "s reached");
    }

    // Fresh counters, same limits: used when a caller wants per-stage metering.
    Budget fresh() const {
        Budget b;
        b.point_cap = point_cap;
        b.subset_cap = subset_cap;
        b.time_cap_seconds = time_cap_seconds;
        return b;
    }
};

// Run-wide configuration: budgets plus the parallelism degree for the
// enumeration splitter (1 = sequential; results are identical regardless).
struct RunConfig {
    Budget budget;
    int threads = 1;
};

} // namespace mupoly
