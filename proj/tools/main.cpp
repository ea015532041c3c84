#include <iostream>
#include <string>
#include <vector>

#include <striphom/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return striphom::run(args, std::cout, std::cerr);
}
