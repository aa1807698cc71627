#ifndef AIRCOV_VERSION_HPP
#define AIRCOV_VERSION_HPP

#define AIRCOV_VERSION_MAJOR 0
#define AIRCOV_VERSION_MINOR 1
#define AIRCOV_VERSION_PATCH 0
#define AIRCOV_VERSION_STRING "0.1.0"

namespace aircov {
inline const char* version() { return AIRCOV_VERSION_STRING; }
}

#endif
