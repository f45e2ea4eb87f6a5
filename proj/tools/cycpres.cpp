#include "cycpres/cli/app.hpp"

int main(int argc, char** argv) { return cycpres::cli::run(argc, argv); }
