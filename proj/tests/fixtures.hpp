#pragma once

// Shared fixture inputs used by the CLI tests and the acceptance suite; the
// same texts ship as files under fixtures/.

namespace fixtures {

inline constexpr const char* kTriangleConfig =
    "# unit pair over Q(sqrt 3); the forcing witness is a unit triangle\n"
    "dimension = 2\n"
    "field = quad(3)\n"
    "points = (0,0) (1,0)\n"
    "weights = 1, 1\n"
    "target = (0,0)\n";

inline constexpr const char* kRationalPairConfig =
    "dimension = 2\n"
    "field = q\n"
    "points = (0,0) (1,0)\n"
    "weights = 1, 1\n"
    "target = (0,0)\n"
    "max_placements = 8\n"
    "max_points = 16\n"
    "rotation_pool_size = 3\n";

inline constexpr const char* kSingletonConfig =
    "dimension = 2\n"
    "field = q\n"
    "points = (1/2,-1/3)\n"
    "weights = (0,1)\n"  // single complex weight i, sum nonzero
    "target = (1/2,-1/3)\n";

inline constexpr const char* kOddCycleCopies =
    "points = 3\n"
    "copy = 0 1\n"
    "copy = 1 2\n"
    "copy = 2 0\n";

inline constexpr const char* kEvenCycleCopies =
    "points = 4\n"
    "copy = 0 1\n"
    "copy = 1 2\n"
    "copy = 2 3\n"
    "copy = 3 0\n";

inline constexpr const char* kInfeasibleSystem =
    "row = x0:1 | 1\n"
    "row = x0:1 | 0\n"
    "row = x1:1 | 2\n";

inline constexpr const char* kFeasibleSystem =
    "row = x0:1 x1:1 | 2\n"
    "row = x0:1 | 1\n";

}  // namespace fixtures
