#include "nwt/config.hpp"

#include <atomic>

namespace nwt {

namespace {
std::atomic<unsigned> g_thread_count{1};
}

void set_thread_count(unsigned n) { g_thread_count.store(n == 0 ? 1 : n); }

unsigned thread_count() { return g_thread_count.load(); }

}  // namespace nwt
