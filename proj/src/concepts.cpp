// --------------------------------------------------------------------
// Task library access and dataset generation.
// --------------------------------------------------------------------
#include "geoclidean/concepts.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "geoclidean/image_io.hpp"

namespace geoclidean {

std::string to_string(Split s) { return s == Split::Elements ? "elements" : "constraints"; }

const std::vector<Task>& builtin_tasks() {
    static const std::vector<Task> tasks = [] {
        std::vector<Task> out;
        for (const auto& src : builtin_task_sources()) {
            Task task;
            task.concept_id = src.concept_id;
            task.split = src.split;
            for (auto [text, slot] : {std::pair{src.target, &task.target},
                                      std::pair{src.close, &task.close},
                                      std::pair{src.far, &task.far}}) {
                ParseResult r = parse(text);
                if (!r.ok()) {
                    std::string msg = "builtin concept '" + task.concept_id + "' failed to parse:";
                    for (const auto& d : r.diagnostics) msg += "\n  " + format_diagnostic(d);
                    throw std::logic_error(msg);
                }
                *slot = std::move(*r.program);
            }
            out.push_back(std::move(task));
        }
        return out;
    }();
    return tasks;
}

namespace {

// Weight of each (object, parameter) slot: a reused point pins 2 degrees
// of freedom, a fresh point pins as many as it has constraints.
std::vector<int> slot_weights(const ConceptProgram& p) {
    std::map<std::string, int> constraints;
    for (const auto& s : p.statements)
        if (const auto* pd = std::get_if<PointDecl>(&s))
            constraints[pd->name] = static_cast<int>(pd->constraints.size());
    std::vector<int> weights;
    std::set<std::string> seen;
    for (const auto& s : p.statements) {
        const auto* od = std::get_if<ObjectDecl>(&s);
        if (!od) continue;
        for (const std::string& name : {od->begin, od->end}) {
            weights.push_back(seen.count(name) ? 2 : constraints.at(name));
            seen.insert(name);
        }
    }
    return weights;
}

}  // namespace

int removed_constraints(const ConceptProgram& target, const ConceptProgram& variant) {
    const std::vector<int> wt = slot_weights(target);
    const std::vector<int> wv = slot_weights(variant);
    if (wt.size() != wv.size())
        throw SkeletonMismatchError("variant object skeleton differs from target");
    int removed = 0;
    for (std::size_t i = 0; i < wt.size(); ++i) removed += wt[i] - wv[i];
    return removed;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view concept_id,
                          std::string_view label, int index, int attempt) {
    std::uint64_t h = splitmix64(master_seed);
    h = hash_combine(h, hash_string(concept_id));
    h = hash_combine(h, hash_string(label));
    h = hash_combine(h, static_cast<std::uint64_t>(index));
    h = hash_combine(h, static_cast<std::uint64_t>(attempt));
    return h;
}

namespace {

constexpr int kPerLabel = 5;

std::pair<Realization, std::uint64_t> realize_positive(const Task& task, std::uint64_t master_seed,
                                                       const GenerateConfig& config,
                                                       std::string_view label, int index) {
    RealizeConfig cfg = config.realize;
    cfg.seed = derive_seed(master_seed, task.concept_id, label, index, 0);
    return {realize(task.target, cfg), cfg.seed};
}

// Negatives are resampled until they fail the target check, so a freed
// point that coincidentally lands back on the removed constraint's object
// never ships as a negative.
std::pair<Realization, std::uint64_t> realize_negative(const Task& task,
                                                       const ConceptProgram& variant,
                                                       std::uint64_t master_seed,
                                                       const GenerateConfig& config,
                                                       std::string_view label, int index) {
    for (int attempt = 0; attempt < config.max_filter_attempts; ++attempt) {
        RealizeConfig cfg = config.realize;
        cfg.seed = derive_seed(master_seed, task.concept_id, label, index, attempt);
        Realization r = realize(variant, cfg);
        if (!satisfies(task.target, r)) return {std::move(r), cfg.seed};
    }
    throw UnrealizableError("task '" + task.concept_id + "': could not sample a " +
                            std::string(label) + " realization that violates the target");
}

}  // namespace

TrialSet sample_trialset(const Task& task, std::uint64_t master_seed,
                         const GenerateConfig& config) {
    TrialSet trial;
    trial.task = &task;
    trial.master_seed = master_seed;
    for (int i = 1; i <= kPerLabel; ++i)
        trial.refs.push_back(realize_positive(task, master_seed, config, "ref", i));
    for (int i = 1; i <= kPerLabel; ++i)
        trial.positives.push_back(realize_positive(task, master_seed, config, "pos", i));
    for (int i = 1; i <= kPerLabel; ++i)
        trial.close_negs.push_back(realize_negative(task, task.close, master_seed, config, "close", i));
    for (int i = 1; i <= kPerLabel; ++i)
        trial.far_negs.push_back(realize_negative(task, task.far, master_seed, config, "far", i));
    return trial;
}

void write_trialset(const Task& task, const GenerateConfig& config,
                    const std::filesystem::path& out_root, std::vector<ManifestRow>& rows) {
    const TrialSet trial = sample_trialset(task, config.master_seed, config);
    const std::string split = to_string(task.split);
    const std::filesystem::path dir = out_root / split / task.concept_id;
    std::filesystem::create_directories(dir);

    struct Group {
        const std::vector<std::pair<Realization, std::uint64_t>>* items;
        const char* file_prefix;
        const char* label;
    };
    const Group groups[] = {{&trial.refs, "ref", "ref"},
                            {&trial.positives, "pos", "pos"},
                            {&trial.close_negs, "close", "close_neg"},
                            {&trial.far_negs, "far", "far_neg"}};
    for (const auto& g : groups) {
        for (std::size_t i = 0; i < g.items->size(); ++i) {
            const auto& [realization, seed] = (*g.items)[i];
            const std::string stem = std::string(g.file_prefix) + "_" + std::to_string(i + 1);
            write_png(dir / (stem + ".png"), rasterize(to_scene(realization), config.render));
            if (config.write_realizations) {
                std::ofstream out(dir / (stem + ".json"));
                out << realization_to_json(realization).dump(2) << '\n';
            }
            rows.push_back({split, task.concept_id, split + "/" + task.concept_id + "/" + stem + ".png",
                            g.label, seed});
        }
    }
}

std::size_t DatasetManifest::task_count() const {
    std::set<std::pair<std::string, std::string>> tasks;
    for (const auto& row : rows) tasks.insert({row.split, row.concept_id});
    return tasks.size();
}

DatasetManifest generate_dataset(const GenerateConfig& config,
                                 const std::filesystem::path& out_dir) {
    const auto& tasks = builtin_tasks();
    std::filesystem::create_directories(out_dir);

    std::vector<std::vector<ManifestRow>> per_task(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                write_trialset(tasks[i], config, out_dir, per_task[i]);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };

    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                    : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!first_error.empty()) throw UnrealizableError(first_error);

    DatasetManifest manifest;
    manifest.master_seed = config.master_seed;
    for (auto& rows : per_task)
        manifest.rows.insert(manifest.rows.end(), rows.begin(), rows.end());

    write_manifest_csv(manifest, out_dir / "manifest.csv");
    nlohmann::ordered_json meta;
    meta["generator_version"] = manifest.generator_version;
    meta["master_seed"] = manifest.master_seed;
    meta["tasks"] = manifest.task_count();
    meta["scoreable_subtasks"] = manifest.scoreable_subtasks();
    meta["images"] = manifest.rows.size();
    std::ofstream(out_dir / "dataset_meta.json") << meta.dump(2) << '\n';
    return manifest;
}

void write_manifest_csv(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "split,concept,path,label,seed\n";
    for (const auto& r : manifest.rows)
        out << r.split << ',' << r.concept_id << ',' << r.path << ',' << r.label << ',' << r.seed
            << '\n';
}

DatasetManifest read_manifest_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    DatasetManifest manifest;
    std::string line;
    if (!std::getline(in, line) || line.rfind("split,concept,path,label,seed", 0) != 0)
        throw std::runtime_error(path.string() + ": not a dataset manifest");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        ManifestRow row;
        std::string seed;
        if (!std::getline(ss, row.split, ',') || !std::getline(ss, row.concept_id, ',') ||
            !std::getline(ss, row.path, ',') || !std::getline(ss, row.label, ',') ||
            !std::getline(ss, seed))
            throw std::runtime_error(path.string() + ": malformed row: " + line);
        row.seed = std::stoull(seed);
        manifest.rows.push_back(std::move(row));
    }
    return manifest;
}

}  // namespace geoclidean
