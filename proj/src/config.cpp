#include "wildram/config.hpp"

#include "wildram/errors.hpp"

namespace wildram {

namespace {
thread_local long g_window = 64;
}

long default_window() { return g_window; }

void set_default_window(long w) {
  if (w < 1) throw DomainError("truncation window must be positive, got " + std::to_string(w));
  g_window = w;
}

}  // namespace wildram
