// --------------------------------------------------------------------
// Few-shot evaluation protocol: features, prototype distances, per-task
// min-max normalization, a single global threshold fitted across all 74
// subtasks, accuracies and the human-accuracy correlation.
// --------------------------------------------------------------------
#pragma once

#include <functional>
#include <optional>
#include <span>

#include "geoclidean/concepts.hpp"
#include "geoclidean/render.hpp"

#include "json.hpp"

namespace geoclidean {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FeatureVector {
    std::vector<double> values;
    std::string extractor_id;
};

// Externally computed per-image features, keyed by manifest path.
class FeatureStore {
public:
    static FeatureStore load_csv(const std::filesystem::path& path);

    const std::vector<double>& lookup(const std::string& image_path) const;
    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }

private:
    std::map<std::string, std::vector<double>> vectors_;
    std::size_t dim_ = 0;
};

// extractor_id: pixels32 (32x32 box-averaged intensities, length 1024),
// edgehist (16 orientation bins mod pi x 4x4 grid, length 256,
// L2-normalized), or external (store lookup by image path).
FeatureVector extract(const std::string& extractor_id, const RasterImage& image,
                      const std::string& image_path = "", const FeatureStore* external = nullptr);

// Elementwise mean; exact for identical inputs.
FeatureVector build_prototype(const std::vector<FeatureVector>& refs);

double euclidean_distance(const FeatureVector& a, const FeatureVector& b);

struct TaskScore {
    std::string concept_id;
    std::string subtask;  // "close" | "far"
    double accuracy = 0.0;
};

// One task's 15 normalized test distances. Normalization is min-max over
// the 15 test images; a zero-range task maps everything to 0.5 so that
// constant features score chance.
struct TaskDistances {
    std::string split;
    std::string concept_id;
    std::vector<double> pos;        // 5
    std::vector<double> close_neg;  // 5
    std::vector<double> far_neg;    // 5
};

TaskDistances normalize_distances(std::string split, std::string concept_id,
                                  std::vector<double> pos, std::vector<double> close_neg,
                                  std::vector<double> far_neg);

// Predict in-concept iff f(d) < theta; accuracy over 5 pos + 5 neg each.
std::pair<TaskScore, TaskScore> score_task(const TaskDistances& task, double theta);

double mean_accuracy(const std::vector<TaskDistances>& tasks, double theta);

// Best-performing threshold on the grid {0.00, 0.01, ..., 1.00}, ties
// broken toward smaller theta.
double fit_threshold(const std::vector<TaskDistances>& tasks);

// Pearson product-moment correlation; throws on length < 2, length
// mismatch or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

struct HumanAccuracy {
    const char* concept_id;
    double close;
    double far;
};
// Published human accuracies for the 74 benchmark subtasks.
const std::vector<HumanAccuracy>& human_reference();

struct SubtaskResult {
    std::string split;
    std::string concept_id;
    std::string subtask;
    double accuracy = 0.0;
};

struct EvalReport {
    std::string extractor;
    double theta_star = 0.0;
    double mean_accuracy = 0.0;
    std::optional<double> pearson_vs_human;
    std::string normalization = "per-task min-max over the 15 test-image distances";
    bool distances_include_references = false;
    std::vector<SubtaskResult> subtasks;

    nlohmann::ordered_json to_json() const;
    static EvalReport from_json(const nlohmann::json& j);
    std::string to_text() const;
};

// Scores a dataset given a feature source for every manifest row.
EvalReport evaluate_manifest(const DatasetManifest& manifest, const std::string& extractor_id,
                             const std::function<FeatureVector(const ManifestRow&)>& features);

// Loads images (or the external feature file) and scores a generated
// dataset directory containing manifest.csv.
EvalReport evaluate_dataset(const std::filesystem::path& data_dir, const std::string& extractor_id,
                            const std::optional<std::filesystem::path>& features_file = std::nullopt,
                            int jobs = 0);

}  // namespace geoclidean
