#pragma once

// Built-in worked examples: 1 and 2 run the classical modular scheme on its
// reference numbers, 3 walks the quasigroup scheme through every intermediate
// table. Each demo checks its output against the expected values and returns
// 0 only when all of them match.
int run_demo(int example);
