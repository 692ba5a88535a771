#include "laxdesc/frontend/cli.hpp"

int main(int argc, char** argv) { return laxdesc::frontend::run(argc, argv); }
