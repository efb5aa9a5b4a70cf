#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cyclotome/parallel.hpp"

using namespace cyclotome;

TEST_CASE("effective_threads resolution order") {
    CHECK(effective_threads(5) == 5);

    setenv("CYCLOTOME_THREADS", "3", 1);
    CHECK(effective_threads(0) == 3);
    CHECK(effective_threads(2) == 2);   // explicit request wins

    setenv("CYCLOTOME_THREADS", "garbage", 1);
    CHECK(effective_threads(0) >= 1);

    unsetenv("CYCLOTOME_THREADS");
    CHECK(effective_threads(0) >= 1);
}

TEST_CASE("parallel_chunks covers the range exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_chunks(0, 1000, 7, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) ++hits[i];
    });
    for (const auto& h : hits) CHECK(h.load() == 1);

    // empty range and more workers than items
    parallel_chunks(5, 5, 4, [&](std::size_t, std::uint64_t, std::uint64_t) { FAIL("no work"); });
    std::atomic<int> count{0};
    parallel_chunks(0, 3, 16, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        count += static_cast<int>(hi - lo);
    });
    CHECK(count.load() == 3);
}

TEST_CASE("worker exceptions reach the caller") {
    CHECK_THROWS_AS(
        parallel_chunks(0, 100, 4,
                        [&](std::size_t w, std::uint64_t, std::uint64_t) {
                            if (w == 2) throw std::runtime_error("boom");
                        }),
        std::runtime_error);
}
