#include "fermisea/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return fermisea::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
