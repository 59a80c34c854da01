#pragma once

// Formula perturbation used by mutation tests of the oracle commands. Only
// present in builds that define WSG_FAULT_INJECTION.
#ifdef WSG_FAULT_INJECTION
namespace wsg::fault {
inline bool floor_to_ceil = false;
}
#define WSG_MUTABLE_FLOOR(n, d) (::wsg::fault::floor_to_ceil ? ::wsg::ceil_div((n), (d)) : ::wsg::floor_div((n), (d)))
#else
#define WSG_MUTABLE_FLOOR(n, d) ::wsg::floor_div((n), (d))
#endif
