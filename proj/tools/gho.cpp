// Copyright 2026 The gho Authors
// SPDX-License-Identifier: Apache-2.0

#include "gho/cli/app.hpp"

int main(int argc, char** argv) { return gho::cli::run_cli(argc, argv); }
