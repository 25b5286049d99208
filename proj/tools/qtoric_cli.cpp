#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qtoric/qtoric.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generalized Delzant construction from an exact halfspace description"};

    std::string input_path;
    std::string report_path = "stdout";
    std::string emit_samples;
    std::string faces_mode = "vertices";
    std::int64_t samples = -1;
    std::int64_t seed = -1;
    double tolerance = -1.0;

    app.add_option("--input", input_path, "problem config file")->required();
    app.add_option("--samples", samples, "override sample count");
    app.add_option("--seed", seed, "override RNG seed");
    app.add_option("--tolerance", tolerance, "override level-set tolerance");
    app.add_option("--emit-samples", emit_samples, "write sampled moment values as CSV");
    app.add_option("--report", report_path, "report destination: path or 'stdout'");
    app.add_option("--faces", faces_mode, "isotropy faces: vertices|all")
        ->check(CLI::IsMember({"vertices", "all"}));

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return int(qtoric::ExitCode::UsageError);
    }
    std::stringstream buf;
    buf << in.rdbuf();

    qtoric::ProblemConfig cfg;
    try {
        cfg = qtoric::parse_config(buf.str());
    } catch (const qtoric::Error& e) {
        std::cerr << e.what() << "\n";
        return int(qtoric::ExitCode::ParseError);
    }
    if (samples >= 0) cfg.samples = std::size_t(samples);
    if (seed >= 0) cfg.seed = std::uint64_t(seed);
    if (tolerance >= 0) cfg.tolerance = tolerance;
    if (!emit_samples.empty()) cfg.emit_samples = emit_samples;

    qtoric::FaceSelection faces = faces_mode == "all" ? qtoric::FaceSelection::All
                                                      : qtoric::FaceSelection::Vertices;
    qtoric::PipelineResult result = qtoric::run_pipeline(cfg, faces);

    if (report_path == "stdout") {
        std::cout << result.report;
    } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << report_path << "\n";
            return int(qtoric::ExitCode::UsageError);
        }
        out << result.report;
    }
    if (!cfg.emit_samples.empty() && result.code == qtoric::ExitCode::Ok) {
        std::ofstream out(cfg.emit_samples, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << cfg.emit_samples << "\n";
            return int(qtoric::ExitCode::UsageError);
        }
        out << result.csv;
    }
    return int(result.code);
}
