#include <catch2/catch_amalgamated.hpp>
#include "qsmzv/qsmzv.hpp"
TEST_CASE("placeholder-acceptance") { CHECK(true); }
