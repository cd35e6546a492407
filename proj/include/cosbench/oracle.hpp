#pragma once

#include "cosbench/types.hpp"

#include <string>
#include <vector>

namespace cosbench {
namespace oracle {

// Deterministic ground-truth solvers: the single source of gold answers,
// synthesized demonstrations, and mock-model answers.

struct GrabState {
    std::vector<char> remaining; // labels still in the scene
    std::vector<char> cleared;   // grabbed so far, in order
};

struct SimulationResult {
    bool valid = false;
    std::string reason; // names the offending brick when invalid
};

/// Bricks strictly above `target` in its stack, top-down, then `target`.
/// In-front relations never block a grab. Throws std::invalid_argument for an
/// unknown target.
std::vector<char> solve_brick(const BrickScene& scene, char target);

/// Replays `sequence`; a grab is legal iff no remaining brick sits directly on
/// the grabbed brick. Illegality is a return value, not an error.
SimulationResult simulate_grabs(const BrickScene& scene, const std::vector<char>& sequence);

/// All objects matching `condition` that are outside `target_box`, in
/// canonical (box, size, ordinal) order.
std::vector<NlvrMove> solve_nlvr(const NlvrScene& scene, const NlvrValue& condition,
                                 BoxPos target_box);

struct NavSolution {
    std::vector<char> path; // root first
    int distance_m = 0;
};

/// Thrown when no non-root node of the queried kind exists.
struct UnsolvableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when two nearest candidates tie; generation must prevent this.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unique nearest non-root node of `kind` with the root-to-node tree path.
NavSolution solve_nav(const NavMap& map, LandmarkKind kind);

namespace testsupport {

struct NavPathEntry {
    char node = 'A';
    std::vector<char> path;
    int distance_m = 0;
};

/// Brute-force path and distance from root to every non-root node.
std::vector<NavPathEntry> enumerate_nav_paths(const NavMap& map);

/// Every legal grab sequence whose final grab is `target` (the search stops a
/// branch once the target is grabbed). Exponential; for small scenes only.
std::vector<std::vector<char>> enumerate_grab_sequences(const BrickScene& scene, char target);

} // namespace testsupport

} // namespace oracle
} // namespace cosbench
