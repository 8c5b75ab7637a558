#include <wzw/cli.hpp>

int main(int argc, char** argv) { return wzw::cli::run(argc, argv, std::cout, std::cerr); }
