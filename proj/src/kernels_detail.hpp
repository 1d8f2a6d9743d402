#pragma once

#include "nsopt/kernels.hpp"

// Internal linkage points between the dispatcher and the per-ISA translation
// units. Variant tables exist only when the matching TU is compiled in.
namespace nsopt::kernels::detail {

extern const KernelTable kScalarTable;

#if defined(NSOPT_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif

#if defined(NSOPT_HAVE_NEON_KERNELS)
extern const KernelTable kNeonTable;
#endif

}  // namespace nsopt::kernels::detail
