#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "polariton/cli/log.hpp"

int main(int argc, char** argv) {
    polariton::cli::logger().set_min_level(polariton::cli::Level::Warn);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
