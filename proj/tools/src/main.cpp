// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include <iostream>

#include "chebtrace_cli/cli.hpp"

int main(int argc, char** argv) { return chebtrace::cli::run(argc, argv, std::cout, std::cerr); }
