#include <string>
#include <vector>

#include "linspect/cli_commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return linspect::cli::run_command(args);
}
