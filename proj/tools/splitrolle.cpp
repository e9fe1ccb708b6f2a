#include <splitrolle/cli/app.hpp>

int main(int argc, char** argv) { return srolle::cli::run(argc, argv); }
