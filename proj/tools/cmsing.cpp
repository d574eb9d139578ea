#include "cmsing/cli.hpp"

int main(int argc, char** argv) {
  return cmsing::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
