#include "loopflag/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json_out = false;
    for (const auto& a : args) json_out = json_out || a == "--json";

    auto result = loopflag::cli::run(args);
    if (json_out)
        std::cout << result.to_json().dump(2) << "\n";
    else if (result.exit_code == 0)
        std::cout << loopflag::cli::render_text(result);
    else
        std::cerr << loopflag::cli::render_text(result);
    return result.exit_code;
}
