#include "cassoc/cli.h"

#include <iostream>

int main(int argc, char **argv)
{
	return cassoc::cli::run(argc, argv, std::cout, std::cerr);
}
