#include "doctest.h"

#include "cosal/initialization.hpp"

using namespace cosal;

TEST_CASE("fusion averages then rescales") {
    PixelMap a(16, 16, 0.2);
    PixelMap b(16, 16, 0.4);
    a.at(3, 5) = 0.6;
    b.at(3, 5) = 0.8;

    PixelMap fused = fuse_initial({a, b});
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) {
            double want = (x == 3 && y == 5) ? 1.0 : 0.0;
            CHECK(fused.at(x, y) == doctest::Approx(want).scale(1).epsilon(1e-12));
        }
}

TEST_CASE("single input map is rescaled only") {
    PixelMap a(16, 16, 0.25);
    a.at(0, 0) = 0.75;
    a.at(1, 0) = 0.5;
    PixelMap fused = fuse_initial({a});
    CHECK(fused.at(0, 0) == doctest::Approx(1.0));
    CHECK(fused.at(1, 0) == doctest::Approx(0.5));
    CHECK(fused.at(5, 5) == doctest::Approx(0.0).scale(1));
}

TEST_CASE("featureless fusion flattens to zero") {
    PixelMap a(16, 16, 0.3);
    PixelMap b(16, 16, 0.7);
    PixelMap fused = fuse_initial({a, b});
    for (double v : fused.values) CHECK(v == 0.0);
}

TEST_CASE("fusion input validation") {
    CHECK_THROWS_AS(fuse_initial({}), std::invalid_argument);

    PixelMap a(16, 16, 0.5);
    PixelMap small(8, 16, 0.5);
    CHECK_THROWS_AS(fuse_initial({a, small}), std::invalid_argument);

    PixelMap hot(16, 16, 0.5);
    hot.at(2, 2) = 1.5;
    CHECK_THROWS_AS(fuse_initial({hot}), std::invalid_argument);
    hot.at(2, 2) = -0.1;
    CHECK_THROWS_AS(fuse_initial({hot}), std::invalid_argument);
}
