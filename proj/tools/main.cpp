// --------------------------------------------------------------------
// geoclidean CLI: validate | render | generate | eval | report
// --------------------------------------------------------------------
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "geoclidean/concepts.hpp"
#include "geoclidean/eval.hpp"
#include "geoclidean/image_io.hpp"

namespace gc = geoclidean;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnrealizable = 4;
constexpr int kExitEval = 5;

std::string default_out_root() {
    if (const char* env = std::getenv("GEOCLIDEAN_OUT")) return env;
    return "out";
}

int run_validate(const std::string& file) {
    const gc::ParseResult result = gc::parse_file(file);
    for (const auto& d : result.diagnostics)
        std::cerr << file << ':' << gc::format_diagnostic(d) << '\n';
    if (!result.ok()) return kExitValidation;
    const auto& program = *result.program;
    std::cout << program.name << ": " << program.object_count() << " objects, "
              << program.point_count() << " points, " << program.visible_count() << " visible\n";
    return 0;
}

int run_render(const std::string& file, std::uint64_t seed, std::string out_dir, int n,
               const gc::RenderConfig& render_cfg, bool pgm, bool dump_realizations) {
    const gc::ParseResult result = gc::parse_file(file);
    for (const auto& d : result.diagnostics)
        std::cerr << file << ':' << gc::format_diagnostic(d) << '\n';
    if (!result.ok()) return kExitValidation;
    const gc::ConceptProgram& program = *result.program;
    const std::string name = program.name.empty() ? "scene" : program.name;

    std::filesystem::create_directories(out_dir);
    for (int i = 0; i < n; ++i) {
        gc::RealizeConfig cfg;
        cfg.seed = gc::derive_seed(seed, name, "render", i, 0);
        const gc::Realization realization = gc::realize(program, cfg);
        const gc::Scene scene = gc::to_scene(realization);
        const std::string stem = name + "_" + std::to_string(i + 1);
        const std::filesystem::path base = std::filesystem::path(out_dir) / stem;
        std::ofstream(base.string() + ".svg") << gc::render_vector(scene, render_cfg);
        const gc::RasterImage img = gc::rasterize(scene, render_cfg);
        gc::write_png(base.string() + ".png", img);
        if (pgm) gc::write_pgm(base.string() + ".pgm", img);
        if (dump_realizations)
            std::ofstream(base.string() + ".json") << gc::realization_to_json(realization).dump(2) << '\n';
        std::cout << base.string() << ".{svg,png" << (pgm ? ",pgm" : "") << "}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geoclidean concept programs: validate, realize, render, generate and score"};
    app.require_subcommand(1);

    // validate
    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "Check a .gcl concept program");
    validate->add_option("file", validate_file, "concept program (.gcl)")->required();

    // render
    std::string render_file, render_out = default_out_root();
    std::uint64_t render_seed = 0;
    int render_n = 1;
    gc::RenderConfig render_cfg;
    bool render_pgm = false, render_dump = false, render_no_aa = false;
    auto* render = app.add_subcommand("render", "Realize a concept and write svg+png images");
    render->add_option("file", render_file, "concept program (.gcl)")->required();
    render->add_option("--seed", render_seed, "master seed (default 0)");
    render->add_option("--out", render_out, "output directory");
    render->add_option("--n", render_n, "number of realizations")->check(CLI::PositiveNumber);
    render->add_option("--pixels", render_cfg.pixels, "raster size")->check(CLI::Range(32, 4096));
    render->add_option("--stroke", render_cfg.stroke_width, "stroke width in px");
    render->add_flag("--no-antialias", render_no_aa, "disable 4x4 supersampling");
    render->add_flag("--pgm", render_pgm, "also write .pgm");
    render->add_flag("--realizations", render_dump, "also write realization .json");

    // generate
    gc::GenerateConfig gen_cfg;
    std::string gen_out = default_out_root();
    bool gen_no_aa = false;
    auto* generate = app.add_subcommand("generate", "Write the full 37-task dataset + manifest");
    generate->add_option("--seed", gen_cfg.master_seed, "master seed (default 0)");
    generate->add_option("--out", gen_out, "output directory");
    generate->add_option("--jobs", gen_cfg.jobs, "worker threads (default: hardware)");
    generate->add_option("--pixels", gen_cfg.render.pixels, "raster size")->check(CLI::Range(32, 4096));
    generate->add_option("--stroke", gen_cfg.render.stroke_width, "stroke width in px");
    generate->add_flag("--no-antialias", gen_no_aa, "disable 4x4 supersampling");
    generate->add_flag("--realizations", gen_cfg.write_realizations, "also write realization .json");

    // eval
    std::string eval_data, eval_extractor = "pixels32", eval_features, eval_out;
    int eval_jobs = 0;
    auto* eval = app.add_subcommand("eval", "Score a generated dataset with a feature extractor");
    eval->add_option("--data", eval_data, "dataset directory (with manifest.csv)")->required();
    eval->add_option("--extractor", eval_extractor, "pixels32 | edgehist | external");
    eval->add_option("--features", eval_features, "external features csv (image_path,v0,v1,...)");
    eval->add_option("--out", eval_out, "write the JSON report here");
    eval->add_option("--jobs", eval_jobs, "worker threads (default: hardware)");

    // report
    std::string report_in;
    auto* report = app.add_subcommand("report", "Render the text table from a JSON report");
    report->add_option("--in", report_in, "report JSON produced by eval")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(validate_file);
        if (*render) {
            render_cfg.antialias = !render_no_aa;
            return run_render(render_file, render_seed, render_out, render_n, render_cfg,
                              render_pgm, render_dump);
        }
        if (*generate) {
            gen_cfg.render.antialias = !gen_no_aa;
            const gc::DatasetManifest manifest = gc::generate_dataset(gen_cfg, gen_out);
            std::cout << "wrote " << manifest.rows.size() << " images across "
                      << manifest.task_count() << " tasks (" << manifest.scoreable_subtasks()
                      << " scoreable subtasks) to " << gen_out << '\n';
            return 0;
        }
        if (*eval) {
            std::optional<std::filesystem::path> features;
            if (!eval_features.empty()) features = eval_features;
            const gc::EvalReport r = gc::evaluate_dataset(eval_data, eval_extractor, features, eval_jobs);
            if (!eval_out.empty()) std::ofstream(eval_out) << r.to_json().dump(2) << '\n';
            std::cout << r.to_text();
            return 0;
        }
        if (*report) {
            std::ifstream in(report_in);
            if (!in) {
                std::cerr << "cannot open " << report_in << '\n';
                return kExitIo;
            }
            nlohmann::json j;
            in >> j;
            std::cout << gc::EvalReport::from_json(j).to_text();
            return 0;
        }
    } catch (const gc::UnrealizableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnrealizable;
    } catch (const gc::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEval;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
