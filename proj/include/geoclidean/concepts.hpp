// --------------------------------------------------------------------
// Builtin concept library (37 tasks, each with Close/Far variants) and
// the trial-set / dataset generator.
// --------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "geoclidean/realize.hpp"
#include "geoclidean/render.hpp"

namespace geoclidean {

inline constexpr const char* kGeneratorVersion = "geoclidean-0.1.0";

enum class Split { Elements, Constraints };

std::string to_string(Split s);

struct Task {
    std::string concept_id;
    Split split = Split::Elements;
    ConceptProgram target;
    ConceptProgram close;
    ConceptProgram far;
};

// 17 Elements tasks followed by 20 Constraints tasks, fixed order.
const std::vector<Task>& builtin_tasks();

// Raw program sources, one entry per task: {target, close, far} texts.
struct TaskSource {
    const char* concept_id;
    Split split;
    const char* target;
    const char* close;
    const char* far;
};
const std::vector<TaskSource>& builtin_task_sources();

// Total constraint relaxation of `variant` relative to `target`, counted
// slot-wise over the shared object skeleton. Each object parameter slot
// weighs 2 for a reused point, otherwise the fresh point's constraint
// count; the result sums the per-slot weight drops. Library invariant:
// removed(close) < removed(far) for every task.
int removed_constraints(const ConceptProgram& target, const ConceptProgram& variant);

struct GenerateConfig {
    std::uint64_t master_seed = 0;
    RealizeConfig realize;
    RenderConfig render;
    int jobs = 0;  // 0: hardware concurrency
    bool write_realizations = false;
    int max_filter_attempts = 100;  // negative resampling budget per image
};

struct ManifestRow {
    std::string split;
    std::string concept_id;
    std::string path;   // relative to the dataset root
    std::string label;  // ref | pos | close_neg | far_neg
    std::uint64_t seed = 0;
};

struct DatasetManifest {
    std::vector<ManifestRow> rows;
    std::uint64_t master_seed = 0;
    std::string generator_version = kGeneratorVersion;

    std::size_t task_count() const;
    std::size_t scoreable_subtasks() const { return task_count() * 2; }
};

// One sampled instance of a task: 5 reference realizations plus 15 test
// realizations. Negatives are rejection-filtered so that none satisfies
// the target program.
struct TrialSet {
    const Task* task = nullptr;
    std::uint64_t master_seed = 0;
    std::vector<std::pair<Realization, std::uint64_t>> refs;       // 5
    std::vector<std::pair<Realization, std::uint64_t>> positives;  // 5
    std::vector<std::pair<Realization, std::uint64_t>> close_negs; // 5
    std::vector<std::pair<Realization, std::uint64_t>> far_negs;   // 5
};

TrialSet sample_trialset(const Task& task, std::uint64_t master_seed,
                         const GenerateConfig& config);

// Renders a trial set into <out_root>/<split>/<concept>/ and appends the
// 20 manifest rows.
void write_trialset(const Task& task, const GenerateConfig& config,
                    const std::filesystem::path& out_root, std::vector<ManifestRow>& rows);

// Full 37-task dataset: 740 images plus manifest.csv and dataset_meta.json.
DatasetManifest generate_dataset(const GenerateConfig& config,
                                 const std::filesystem::path& out_dir);

void write_manifest_csv(const DatasetManifest& manifest, const std::filesystem::path& path);
DatasetManifest read_manifest_csv(const std::filesystem::path& path);

// Deterministic per-image seed, stable across platforms and job counts.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view concept_id,
                          std::string_view label, int index, int attempt);

}  // namespace geoclidean
