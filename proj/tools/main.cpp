#include "cli/cli.hpp"

int main(int argc, char** argv) {
    return sphere::cli::run(argc, argv);
}
