#include "cvawwr/rng.hpp"

// NormalStream is header-only; this unit anchors the header in the library.
