#pragma once

namespace nwt {

// Worker threads used by the bit-matrix kernels. Results are bit-identical
// for every thread count; default is 1.
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace nwt
