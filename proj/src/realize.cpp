// --------------------------------------------------------------------
// Rejection-sampling realizer. Free points sample uniformly in the
// margin-inset canvas, 1-constrained points sample on their object,
// 2-constrained points pick uniformly among the valid intersection
// candidates. Degenerate objects or dead-end intersections restart the
// whole scene.
// --------------------------------------------------------------------
#include "geoclidean/realize.hpp"

#include <algorithm>

namespace geoclidean {

const Vec2& Realization::point(std::string_view name) const {
    for (const auto& [n, v] : points)
        if (n == name) return v;
    throw std::out_of_range("no realized point named '" + std::string(name) + "'");
}

const Primitive& Realization::object(std::string_view name) const {
    for (const auto& [n, v] : objects)
        if (n == name) return v;
    throw std::out_of_range("no realized object named '" + std::string(name) + "'");
}

namespace {

bool in_canvas(Vec2 p, const RealizeConfig& cfg) {
    return p.x >= cfg.margin && p.x <= 1.0 - cfg.margin && p.y >= cfg.margin &&
           p.y <= 1.0 - cfg.margin;
}

bool separated(Vec2 p, const Realization& r, const RealizeConfig& cfg) {
    if (cfg.min_separation <= 0.0) return true;
    for (const auto& [name, q] : r.points)
        if (distance(p, q) < cfg.min_separation) return false;
    return true;
}

bool place_point(const PointDecl& pd, Realization& r, const RealizeConfig& cfg,
                 RandomStream& rng) {
    auto valid = [&](Vec2 p) { return in_canvas(p, cfg) && separated(p, r, cfg); };

    if (pd.constraints.empty()) {
        for (int attempt = 0; attempt < cfg.max_attempts_per_point; ++attempt) {
            const Vec2 p{rng.uniform(cfg.margin, 1.0 - cfg.margin),
                         rng.uniform(cfg.margin, 1.0 - cfg.margin)};
            if (separated(p, r, cfg)) {
                r.points.emplace_back(pd.name, p);
                return true;
            }
        }
        return false;
    }
    if (pd.constraints.size() == 1) {
        const Primitive& obj = r.object(pd.constraints[0]);
        for (int attempt = 0; attempt < cfg.max_attempts_per_point; ++attempt) {
            const Vec2 p = sample_on(obj, rng);
            if (valid(p)) {
                r.points.emplace_back(pd.name, p);
                return true;
            }
        }
        return false;
    }
    // Two constraints: the candidate set is fixed, so retrying cannot help;
    // filter and choose uniformly among the valid candidates.
    const IntersectionSet isect =
        intersect(r.object(pd.constraints[0]), r.object(pd.constraints[1]));
    std::vector<Vec2> candidates;
    for (int i = 0; i < isect.count; ++i)
        if (valid(isect[i])) candidates.push_back(isect[i]);
    if (candidates.empty()) return false;
    const Vec2 p = candidates.size() == 1 ? candidates[0] : candidates[rng.below(candidates.size())];
    r.points.emplace_back(pd.name, p);
    return true;
}

bool build_object(const ObjectDecl& od, Realization& r, const RealizeConfig& cfg) {
    const Vec2 a = r.point(od.begin);
    const Vec2 b = r.point(od.end);
    if (od.kind == ObjectKind::Line) {
        if (distance(a, b) < std::max(cfg.min_object_size, kGeomTol)) return false;
        r.objects.emplace_back(od.name, Segment{a, b});
    } else {
        const double radius = distance(a, b);
        if (radius < std::max(cfg.min_object_size, kGeomTol)) return false;
        r.objects.emplace_back(od.name, CircleShape{a, radius});
    }
    return true;
}

}  // namespace

Realization realize(const ConceptProgram& program, const RealizeConfig& config,
                    RealizeStats* stats) {
    RandomStream rng(config.seed);
    if (stats) stats->restarts = 0;
    for (int scene = 0; scene <= config.max_scene_restarts; ++scene) {
        if (stats) stats->restarts = scene;
        Realization r;
        r.program = program;
        r.seed = config.seed;
        bool ok = true;
        for (const auto& stmt : program.statements) {
            if (const auto* pd = std::get_if<PointDecl>(&stmt)) {
                if (!place_point(*pd, r, config, rng)) {
                    ok = false;
                    break;
                }
            } else if (!build_object(std::get<ObjectDecl>(stmt), r, config)) {
                ok = false;
                break;
            }
        }
        if (ok) return r;
    }
    throw UnrealizableError("program '" + program.name + "' not realizable within " +
                            std::to_string(config.max_scene_restarts) + " scene restarts");
}

Scene to_scene(const Realization& r) {
    Scene scene;
    for (const auto& stmt : r.program.statements) {
        if (const auto* od = std::get_if<ObjectDecl>(&stmt))
            if (od->visible) scene.primitives.push_back(r.object(od->name));
    }
    return scene;
}

bool satisfies(const ConceptProgram& target, const Realization& r) {
    // Align the two programs object by object.
    std::vector<const ObjectDecl*> target_objs, real_objs;
    for (const auto& s : target.statements)
        if (const auto* od = std::get_if<ObjectDecl>(&s)) target_objs.push_back(od);
    for (const auto& s : r.program.statements)
        if (const auto* od = std::get_if<ObjectDecl>(&s)) real_objs.push_back(od);
    if (target_objs.size() != real_objs.size())
        throw SkeletonMismatchError("object counts differ between target and realization");
    for (std::size_t i = 0; i < target_objs.size(); ++i) {
        if (target_objs[i]->name != real_objs[i]->name || target_objs[i]->kind != real_objs[i]->kind)
            throw SkeletonMismatchError("object skeleton differs at '" + target_objs[i]->name + "'");
    }

    // Concrete coordinate occupying each (object, slot) position of the
    // target, taken from the realization's own point assignment.
    std::map<std::string, std::vector<Vec2>> groups;  // target point name -> slot coords
    for (std::size_t i = 0; i < target_objs.size(); ++i) {
        groups[target_objs[i]->begin].push_back(r.point(real_objs[i]->begin));
        groups[target_objs[i]->end].push_back(r.point(real_objs[i]->end));
    }

    // Point-sharing in the target must be coincidence in the realization.
    for (const auto& [name, coords] : groups) {
        for (std::size_t i = 1; i < coords.size(); ++i)
            if (distance(coords[0], coords[i]) > kSceneTol) return false;
    }

    // Every on-object constraint of the target must hold against the
    // realization's concrete objects.
    for (const auto& stmt : target.statements) {
        const auto* pd = std::get_if<PointDecl>(&stmt);
        if (!pd || pd->constraints.empty()) continue;
        const auto it = groups.find(pd->name);
        if (it == groups.end()) continue;  // point unused by any object: nothing visible to check
        for (const auto& cname : pd->constraints) {
            if (distance_to(r.object(cname), it->second.front()) > kSceneTol) return false;
        }
    }
    return true;
}

nlohmann::ordered_json realization_to_json(const Realization& r) {
    nlohmann::ordered_json j;
    j["program_name"] = r.program.name;
    j["seed"] = r.seed;
    auto& pts = j["points"] = nlohmann::ordered_json::object();
    for (const auto& [name, p] : r.points) pts[name] = {p.x, p.y};
    auto& objs = j["objects"] = nlohmann::ordered_json::object();
    for (const auto& stmt : r.program.statements) {
        const auto* od = std::get_if<ObjectDecl>(&stmt);
        if (!od) continue;
        nlohmann::ordered_json o;
        o["kind"] = to_string(od->kind);
        o["begin"] = od->begin;
        o["end"] = od->end;
        o["visible"] = od->visible;
        if (od->kind == ObjectKind::Circle)
            o["radius"] = std::get<CircleShape>(r.object(od->name)).radius;
        objs[od->name] = std::move(o);
    }
    return j;
}

}  // namespace geoclidean
