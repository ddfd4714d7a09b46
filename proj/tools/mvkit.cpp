// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/cli.hpp"

int main(int argc, char** argv) { return mvkit::run_command(argc, argv); }
