// uswqed_main.cpp — thin entry point for the uswqed CLI.
#include "uswqed/cli.hpp"

int main(int argc, char** argv) {
    return uswqed::cli::run(argc, argv);
}
