#include <atomic>
#include <csignal>
#include <iostream>

#include "subgame/cli.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  return subgame::cli::run({argv, argv + argc}, std::cout, std::cerr, &g_interrupted);
}
