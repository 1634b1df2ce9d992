// --------------------------------------------------------------------
// Interpreting a concept program into concrete coordinates: sequential
// sampling with point-level retries and whole-scene restarts.
// --------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geoclidean/dsl.hpp"
#include "geoclidean/geom.hpp"

#include "json.hpp"

namespace geoclidean {

struct RealizeConfig {
    // Canvas is the unit square; every realized point must land inside the
    // margin inset. Circles may overflow the canvas.
    double margin = 0.05;
    double min_separation = 0.025;   // between distinct realized points; 0 disables
    double min_object_size = 0.1;    // segment length / circle radius floor; 0 disables
    int max_attempts_per_point = 100;
    int max_scene_restarts = 1000;
    std::uint64_t seed = 0;
};

struct RealizeStats {
    int restarts = 0;
};

// Concrete coordinates for every point and a concrete primitive for every
// object of a program. Entries keep program order.
struct Realization {
    ConceptProgram program;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, Vec2>> points;
    std::vector<std::pair<std::string, Primitive>> objects;

    const Vec2& point(std::string_view name) const;
    const Primitive& object(std::string_view name) const;
};

// Visible primitives only, in program order.
struct Scene {
    std::vector<Primitive> primitives;
    double canvas_size = 1.0;
};

struct UnrealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SkeletonMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Realization realize(const ConceptProgram& program, const RealizeConfig& config,
                    RealizeStats* stats = nullptr);

Scene to_scene(const Realization& r);

// True iff r could be a realization of `target`: r's program must share
// the target's object skeleton (names, kinds, order); every point-sharing
// relation and every on-object constraint of the target is then checked
// against r's concrete geometry within kSceneTol. Used to guarantee that
// generated negatives are not realizations of the target concept.
bool satisfies(const ConceptProgram& target, const Realization& r);

nlohmann::ordered_json realization_to_json(const Realization& r);

}  // namespace geoclidean
