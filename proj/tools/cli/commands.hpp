#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace sphere::cli {

struct Context {
    const CliConfig& cfg;
    std::ostream& out;
    std::ostream& err;
};

int cmd_route(const Context& ctx);
int cmd_partition(const Context& ctx);
int cmd_baseline(const Context& ctx);
int cmd_bench(const Context& ctx);
int cmd_profiles(const Context& ctx);

}  // namespace sphere::cli
