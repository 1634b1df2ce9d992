// --------------------------------------------------------------------
// Evaluation protocol implementation.
// --------------------------------------------------------------------
#include "geoclidean/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include "geoclidean/image_io.hpp"

namespace geoclidean {
namespace {

std::vector<double> box_resample(const RasterImage& img, int out_w, int out_h) {
    std::vector<double> out(static_cast<std::size_t>(out_w) * out_h, 0.0);
    const double sx = static_cast<double>(img.width) / out_w;
    const double sy = static_cast<double>(img.height) / out_h;
    for (int oy = 0; oy < out_h; ++oy) {
        const double y0 = oy * sy, y1 = (oy + 1) * sy;
        for (int ox = 0; ox < out_w; ++ox) {
            const double x0 = ox * sx, x1 = (ox + 1) * sx;
            double acc = 0.0, area = 0.0;
            for (int iy = static_cast<int>(std::floor(y0)); iy < static_cast<int>(std::ceil(y1)); ++iy) {
                const double wy = std::min<double>(iy + 1, y1) - std::max<double>(iy, y0);
                if (wy <= 0.0) continue;
                for (int ix = static_cast<int>(std::floor(x0)); ix < static_cast<int>(std::ceil(x1)); ++ix) {
                    const double wx = std::min<double>(ix + 1, x1) - std::max<double>(ix, x0);
                    if (wx <= 0.0) continue;
                    acc += wx * wy * img.at(std::min(iy, img.height - 1), std::min(ix, img.width - 1));
                    area += wx * wy;
                }
            }
            out[static_cast<std::size_t>(oy) * out_w + ox] = area > 0.0 ? acc / area : 0.0;
        }
    }
    return out;
}

std::vector<double> edge_histogram(const RasterImage& img) {
    constexpr int kBins = 16;
    constexpr int kGrid = 4;
    std::vector<double> hist(kBins * kGrid * kGrid, 0.0);
    for (int y = 1; y < img.height - 1; ++y) {
        for (int x = 1; x < img.width - 1; ++x) {
            const double gx = (img.at(y, x + 1) - img.at(y, x - 1)) / 2.0;
            const double gy = (img.at(y + 1, x) - img.at(y - 1, x)) / 2.0;
            const double mag = std::hypot(gx, gy);
            if (mag <= 0.0) continue;
            double theta = std::atan2(gy, gx);  // orientation modulo pi
            if (theta < 0.0) theta += std::numbers::pi;
            if (theta >= std::numbers::pi) theta -= std::numbers::pi;
            const int bin = std::min(kBins - 1, static_cast<int>(theta / std::numbers::pi * kBins));
            const int cy = std::min(kGrid - 1, y * kGrid / img.height);
            const int cx = std::min(kGrid - 1, x * kGrid / img.width);
            hist[static_cast<std::size_t>((cy * kGrid + cx) * kBins + bin)] += mag;
        }
    }
    double norm = 0.0;
    for (double v : hist) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 1e-12)
        for (double& v : hist) v /= norm;
    return hist;
}

}  // namespace

FeatureStore FeatureStore::load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open features file: " + path.string());
    FeatureStore store;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("image_path", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string key, field;
        if (!std::getline(ss, key, ',')) continue;
        std::vector<double> values;
        while (std::getline(ss, field, ',')) values.push_back(std::stod(field));
        if (store.dim_ == 0) store.dim_ = values.size();
        if (values.empty() || values.size() != store.dim_)
            throw EvalError(path.string() + ":" + std::to_string(line_no) +
                            ": inconsistent feature width");
        store.vectors_[key] = std::move(values);
    }
    if (store.vectors_.empty()) throw EvalError(path.string() + ": no feature rows");
    return store;
}

const std::vector<double>& FeatureStore::lookup(const std::string& image_path) const {
    const auto it = vectors_.find(image_path);
    if (it == vectors_.end()) throw EvalError("no external feature vector for '" + image_path + "'");
    return it->second;
}

FeatureVector extract(const std::string& extractor_id, const RasterImage& image,
                      const std::string& image_path, const FeatureStore* external) {
    if (extractor_id == "pixels32") return {box_resample(image, 32, 32), extractor_id};
    if (extractor_id == "edgehist") return {edge_histogram(image), extractor_id};
    if (extractor_id == "external") {
        if (!external) throw EvalError("external extractor requires a features file");
        return {external->lookup(image_path), extractor_id};
    }
    throw EvalError("unknown extractor '" + extractor_id + "'");
}

FeatureVector build_prototype(const std::vector<FeatureVector>& refs) {
    if (refs.empty()) throw EvalError("prototype needs at least one reference vector");
    const std::size_t dim = refs[0].values.size();
    for (const auto& r : refs)
        if (r.values.size() != dim) throw EvalError("prototype: feature length mismatch");
    // Mean around the first vector: exact when all inputs are identical.
    FeatureVector proto{refs[0].values, refs[0].extractor_id};
    for (std::size_t i = 0; i < dim; ++i) {
        double delta = 0.0;
        for (std::size_t r = 1; r < refs.size(); ++r) delta += refs[r].values[i] - refs[0].values[i];
        proto.values[i] += delta / static_cast<double>(refs.size());
    }
    return proto;
}

double euclidean_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.values.size() != b.values.size()) throw EvalError("distance: feature length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

TaskDistances normalize_distances(std::string split, std::string concept_id,
                                  std::vector<double> pos, std::vector<double> close_neg,
                                  std::vector<double> far_neg) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto* v : {&pos, &close_neg, &far_neg}) {
        for (double d : *v) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    const double range = hi - lo;
    auto apply = [&](std::vector<double>& v) {
        for (double& d : v) d = range > 1e-15 ? (d - lo) / range : 0.5;
    };
    apply(pos);
    apply(close_neg);
    apply(far_neg);
    return {std::move(split), std::move(concept_id), std::move(pos), std::move(close_neg),
            std::move(far_neg)};
}

std::pair<TaskScore, TaskScore> score_task(const TaskDistances& task, double theta) {
    auto accuracy = [&](const std::vector<double>& negs) {
        int correct = 0;
        for (double d : task.pos) correct += d < theta ? 1 : 0;
        for (double d : negs) correct += d < theta ? 0 : 1;
        return static_cast<double>(correct) / static_cast<double>(task.pos.size() + negs.size());
    };
    return {TaskScore{task.concept_id, "close", accuracy(task.close_neg)},
            TaskScore{task.concept_id, "far", accuracy(task.far_neg)}};
}

double mean_accuracy(const std::vector<TaskDistances>& tasks, double theta) {
    if (tasks.empty()) throw EvalError("no tasks to score");
    double sum = 0.0;
    for (const auto& t : tasks) {
        const auto [close, far] = score_task(t, theta);
        sum += close.accuracy + far.accuracy;
    }
    return sum / static_cast<double>(tasks.size() * 2);
}

double fit_threshold(const std::vector<TaskDistances>& tasks) {
    double best_theta = 0.0;
    double best = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double theta = i / 100.0;
        const double acc = mean_accuracy(tasks, theta);
        if (acc > best) {
            best = acc;
            best_theta = theta;
        }
    }
    return best_theta;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw EvalError("pearson: length mismatch");
    if (x.size() < 2) throw EvalError("pearson: need at least 2 samples");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw EvalError("pearson: zero variance input");
    return sxy / std::sqrt(sxx * syy);
}

nlohmann::ordered_json EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["extractor"] = extractor;
    j["theta_star"] = theta_star;
    j["mean_accuracy"] = mean_accuracy;
    if (pearson_vs_human)
        j["pearson_vs_human"] = *pearson_vs_human;
    else
        j["pearson_vs_human"] = nullptr;
    j["normalization"] = normalization;
    j["distances_include_references"] = distances_include_references;
    auto& rows = j["subtasks"] = nlohmann::ordered_json::array();
    for (const auto& s : subtasks) {
        rows.push_back({{"split", s.split},
                        {"concept", s.concept_id},
                        {"subtask", s.subtask},
                        {"accuracy", s.accuracy}});
    }
    return j;
}

EvalReport EvalReport::from_json(const nlohmann::json& j) {
    EvalReport r;
    r.extractor = j.at("extractor").get<std::string>();
    r.theta_star = j.at("theta_star").get<double>();
    r.mean_accuracy = j.at("mean_accuracy").get<double>();
    if (!j.at("pearson_vs_human").is_null())
        r.pearson_vs_human = j.at("pearson_vs_human").get<double>();
    r.normalization = j.at("normalization").get<std::string>();
    r.distances_include_references = j.at("distances_include_references").get<bool>();
    for (const auto& row : j.at("subtasks")) {
        r.subtasks.push_back({row.at("split").get<std::string>(),
                              row.at("concept").get<std::string>(),
                              row.at("subtask").get<std::string>(),
                              row.at("accuracy").get<double>()});
    }
    return r;
}

std::string EvalReport::to_text() const {
    std::ostringstream os;
    os << "extractor: " << extractor << '\n';
    os << "theta_star: " << std::fixed << std::setprecision(2) << theta_star << '\n';
    os << "normalization: " << normalization << '\n';
    os << '\n';
    os << std::left << std::setw(13) << "split" << std::setw(16) << "concept" << std::setw(9)
       << "subtask" << "accuracy\n";
    os << std::setprecision(4);
    for (const auto& s : subtasks) {
        os << std::setw(13) << s.split << std::setw(16) << s.concept_id << std::setw(9) << s.subtask
           << s.accuracy << '\n';
    }
    os << std::setw(38) << "average" << mean_accuracy << '\n';
    os << std::setw(38) << "pearson_vs_human";
    if (pearson_vs_human)
        os << *pearson_vs_human << '\n';
    else
        os << "n/a\n";
    return os.str();
}

EvalReport evaluate_manifest(const DatasetManifest& manifest, const std::string& extractor_id,
                             const std::function<FeatureVector(const ManifestRow&)>& features) {
    // Group rows per task preserving manifest order.
    struct Group {
        std::string split;
        std::vector<const ManifestRow*> refs, pos, close_neg, far_neg;
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    for (const auto& row : manifest.rows) {
        auto it = groups.find(row.concept_id);
        if (it == groups.end()) {
            order.push_back(row.concept_id);
            it = groups.emplace(row.concept_id, Group{row.split, {}, {}, {}, {}}).first;
        }
        Group& g = it->second;
        if (row.label == "ref")
            g.refs.push_back(&row);
        else if (row.label == "pos")
            g.pos.push_back(&row);
        else if (row.label == "close_neg")
            g.close_neg.push_back(&row);
        else if (row.label == "far_neg")
            g.far_neg.push_back(&row);
        else
            throw EvalError("unknown manifest label '" + row.label + "'");
    }

    std::vector<TaskDistances> tasks;
    for (const auto& concept_id : order) {
        const Group& g = groups.at(concept_id);
        if (g.refs.size() != 5 || g.pos.size() != 5 || g.close_neg.size() != 5 ||
            g.far_neg.size() != 5)
            throw EvalError("task '" + concept_id + "' is missing images (need 5/5/5/5)");
        std::vector<FeatureVector> ref_features;
        for (const auto* row : g.refs) ref_features.push_back(features(*row));
        const FeatureVector prototype = build_prototype(ref_features);
        auto distances = [&](const std::vector<const ManifestRow*>& rows) {
            std::vector<double> out;
            for (const auto* row : rows) out.push_back(euclidean_distance(prototype, features(*row)));
            return out;
        };
        tasks.push_back(normalize_distances(g.split, concept_id, distances(g.pos),
                                            distances(g.close_neg), distances(g.far_neg)));
    }

    EvalReport report;
    report.extractor = extractor_id;
    report.theta_star = fit_threshold(tasks);
    report.mean_accuracy = mean_accuracy(tasks, report.theta_star);
    for (const auto& t : tasks) {
        const auto [close, far] = score_task(t, report.theta_star);
        report.subtasks.push_back({t.split, t.concept_id, "close", close.accuracy});
        report.subtasks.push_back({t.split, t.concept_id, "far", far.accuracy});
    }

    // Correlation against the embedded human reference, in reference order,
    // only when the dataset covers the full task inventory.
    std::map<std::string, std::pair<double, double>> by_concept;
    for (const auto& t : tasks) {
        const auto [close, far] = score_task(t, report.theta_star);
        by_concept[t.concept_id] = {close.accuracy, far.accuracy};
    }
    const auto& human = human_reference();
    if (by_concept.size() == human.size()) {
        std::vector<double> model_acc, human_acc;
        bool complete = true;
        for (const auto& h : human) {
            const auto it = by_concept.find(h.concept_id);
            if (it == by_concept.end()) {
                complete = false;
                break;
            }
            model_acc.push_back(it->second.first);
            human_acc.push_back(h.close);
            model_acc.push_back(it->second.second);
            human_acc.push_back(h.far);
        }
        if (complete) {
            try {
                report.pearson_vs_human = pearson(model_acc, human_acc);
            } catch (const EvalError&) {
                // constant model accuracies: correlation undefined, leave unset
            }
        }
    }
    return report;
}

EvalReport evaluate_dataset(const std::filesystem::path& data_dir, const std::string& extractor_id,
                            const std::optional<std::filesystem::path>& features_file, int jobs) {
    const DatasetManifest manifest = read_manifest_csv(data_dir / "manifest.csv");

    std::optional<FeatureStore> store;
    if (extractor_id == "external") {
        if (!features_file) throw EvalError("extractor 'external' requires --features FILE");
        store = FeatureStore::load_csv(*features_file);
        return evaluate_manifest(manifest, extractor_id, [&](const ManifestRow& row) {
            return FeatureVector{store->lookup(row.path), extractor_id};
        });
    }

    // Extract image features up front, in parallel.
    std::vector<FeatureVector> cache(manifest.rows.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= manifest.rows.size()) return;
            try {
                const RasterImage img = read_png(data_dir / manifest.rows[i].path);
                cache[i] = extract(extractor_id, img);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };
    unsigned n = jobs > 0 ? static_cast<unsigned>(jobs)
                          : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!first_error.empty()) throw EvalError(first_error);

    std::map<const ManifestRow*, std::size_t> index;
    for (std::size_t i = 0; i < manifest.rows.size(); ++i) index[&manifest.rows[i]] = i;
    return evaluate_manifest(manifest, extractor_id,
                             [&](const ManifestRow& row) { return cache[index.at(&row)]; });
}

}  // namespace geoclidean
