#include <vector>

#include "metriclab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return metriclab::cli::run(args);
}
