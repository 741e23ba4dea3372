// Command-line front end: ring benchmarks and dumps, distance-field
// rendering, metric-axiom fuzzing, and the k-NN evaluation pipeline.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minkcheb/eval.hpp"
#include "minkcheb/grid.hpp"
#include "minkcheb/ingest.hpp"
#include "minkcheb/metrics.hpp"

namespace fs = std::filesystem;
using namespace minkcheb;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run_bench(const std::vector<std::string>& families, int D, int reps,
              const std::string& out_path) {
    std::vector<grid::RingFamily> parsed;
    for (const auto& f : families) parsed.push_back(grid::parse_ring_family(f));

    std::vector<grid::TimingRecord> records;
    for (auto family : parsed) records.push_back(grid::bench_rings(family, D, reps));

    std::ostringstream csv;
    csv << grid::timing_csv_header() << '\n';
    for (const auto& rec : records) csv << grid::timing_csv_row(rec) << '\n';
    if (!out_path.empty()) write_file(out_path, csv.str());

    double cheb_mean = 0.0;
    for (const auto& rec : records)
        if (rec.family == grid::RingFamily::Chebyshev) cheb_mean = rec.mean_seconds;

    std::printf("%-10s %10s %12s %12s %14s %10s\n", "family", "D", "mean_s", "min_s",
                "points", "vs_cheb");
    for (const auto& rec : records) {
        std::string ratio = "-";
        if (cheb_mean > 0.0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2fx", rec.mean_seconds / cheb_mean);
            ratio = buf;
        }
        std::printf("%-10s %10d %12.6f %12.6f %14llu %10s\n",
                    grid::ring_family_name(rec.family), rec.D, rec.mean_seconds,
                    rec.min_seconds, static_cast<unsigned long long>(rec.points_per_run),
                    ratio.c_str());
    }
    return 0;
}

int run_rings(const std::string& family_name, int D, const std::string& format) {
    auto family = grid::parse_ring_family(family_name);
    if (format == "csv") {
        auto run = grid::rings(family, D);
        std::cout << "label,dx,dy\n";
        for (const auto& bucket : run.buckets)
            for (const auto& p : bucket.points)
                std::cout << bucket.label << ',' << p.x << ',' << p.y << '\n';
        return 0;
    }
    auto fast = grid::rings(family, D);
    auto oracle = grid::oracle_rings(family, D);
    if (auto mismatch = grid::compare_runs(fast, oracle)) {
        std::cerr << "mismatch at bucket " << mismatch->label << ": " << mismatch->detail
                  << '\n';
        return 1;
    }
    std::cout << family_name << " D=" << D << ": " << fast.total_points()
              << " points match the oracle\n";
    return 0;
}

int run_render(const std::string& spec_text, int half_size, const std::string& out_path) {
    auto spec = parse_spec(spec_text);
    auto image = grid::render_distance_field(spec, half_size);
    write_file(out_path, grid::to_pgm(image));
    std::cout << "wrote " << image.width << "x" << image.height << " field to " << out_path
              << '\n';
    return 0;
}

int run_metric_check(const std::string& spec_text, std::uint64_t trials, std::uint64_t seed,
                     std::size_t dim, double tolerance) {
    auto spec = parse_spec(spec_text);
    auto report = check_metric_axioms(spec, uniform_vector_sampler(seed, dim), trials,
                                      tolerance);
    std::printf("spec: %s (declared %s)\n", spec.name().c_str(),
                spec.is_metric() ? "metric" : "non-metric");
    std::printf("trials: %llu\n", static_cast<unsigned long long>(report.trials));
    std::printf("non-negativity violations: %llu\n",
                static_cast<unsigned long long>(report.nonnegativity_violations));
    std::printf("identity violations:       %llu\n",
                static_cast<unsigned long long>(report.identity_violations));
    std::printf("symmetry violations:       %llu\n",
                static_cast<unsigned long long>(report.symmetry_violations));
    std::printf("triangle violations:       %llu\n",
                static_cast<unsigned long long>(report.triangle_violations));
    if (report.triangle_witness) {
        const auto& w = *report.triangle_witness;
        std::printf("triangle witness: d(x,z)=%.12g > d(x,y)+d(y,z)=%.12g\n", w.lhs, w.rhs);
        auto dump = [](const char* label, const FeatureVector& v) {
            std::printf("  %s = (", label);
            for (std::size_t i = 0; i < v.size(); ++i)
                std::printf("%s%.6g", i ? ", " : "", v[i]);
            std::printf(")\n");
        };
        dump("x", w.x);
        dump("y", w.y);
        dump("z", w.z);
    }
    return report.clean() ? 0 : 1;
}

int run_eval(const std::string& data_dir, std::vector<std::string> spec_texts, int k_max,
             int folds, std::uint64_t seed, const std::string& reference_text,
             const std::string& out_dir, bool per_k) {
    std::vector<DistanceSpec> specs;
    if (spec_texts.empty()) {
        specs = eval::default_spec_list();
    } else {
        for (const auto& t : spec_texts) specs.push_back(parse_spec(t));
    }
    auto reference = parse_spec(reference_text);
    if (std::find(specs.begin(), specs.end(), reference) == specs.end())
        specs.push_back(reference);

    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(data_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".csv" || ext == ".arff") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());

    std::vector<Dataset> datasets;
    for (const auto& path : paths) {
        try {
            datasets.push_back(ingest::load_dataset(path));
        } catch (const std::exception& e) {
            std::cerr << "skipping " << path << ": " << e.what() << '\n';
        }
    }
    if (datasets.empty()) {
        std::cerr << "no parseable datasets in " << data_dir << '\n';
        return 1;
    }

    auto matrix = eval::run_experiment(datasets, specs, k_max, folds, seed);
    auto summary = eval::aggregate(matrix, reference);

    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "cells.csv").string(), eval::results_csv(matrix));
    write_file((fs::path(out_dir) / "summary.csv").string(), eval::summary_csv(summary));
    if (per_k)
        write_file((fs::path(out_dir) / "per_k.csv").string(), eval::per_k_csv(matrix));

    std::cout << datasets.size() << " dataset(s), " << specs.size() << " distance(s), "
              << folds << "-fold CV, k up to " << k_max << "\n\n";
    std::cout << eval::summary_table(summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance metrics, discrete ring iteration and k-NN evaluation"};
    app.require_subcommand(1);

    // bench
    auto* bench = app.add_subcommand("bench", "time the ring iterators");
    std::vector<std::string> bench_families{"chebyshev", "manhattan", "euclidean", "rodrigues"};
    int bench_D = 2500, bench_reps = 10;
    std::string bench_out;
    bench->add_option("--families", bench_families, "iterator families to time")->delimiter(',');
    bench->add_option("--D", bench_D, "maximal distance bound")->check(CLI::PositiveNumber);
    bench->add_option("--reps", bench_reps, "repetitions per family")->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_out, "CSV output path");

    // rings
    auto* rings_cmd = app.add_subcommand("rings", "dump or verify ring buckets");
    std::string rings_family = "rodrigues", rings_format = "csv";
    int rings_D = 8;
    rings_cmd->add_option("family", rings_family, "chebyshev|manhattan|euclidean|rodrigues")
        ->required();
    rings_cmd->add_option("--D", rings_D, "maximal distance bound")->check(CLI::PositiveNumber);
    rings_cmd->add_option("--format", rings_format, "csv (dump) or check (oracle compare)")
        ->check(CLI::IsMember({"csv", "check"}));

    // render
    auto* render = app.add_subcommand("render", "write a PGM distance field");
    std::string render_spec = "rodrigues:p=1,w1=1,w2=1", render_out = "field.pgm";
    int render_half = 64;
    render->add_option("spec", render_spec, "distance spec, e.g. minkowski:p=0.5")->required();
    render->add_option("--half-size", render_half, "half side length")
        ->check(CLI::PositiveNumber);
    render->add_option("--out", render_out, "output PGM path");

    // metric-check
    auto* check = app.add_subcommand("metric-check", "fuzz the metric axioms");
    std::string check_spec;
    std::uint64_t check_trials = 100000, check_seed = 42;
    std::size_t check_dim = 5;
    double check_tol = 1e-9;
    check->add_option("spec", check_spec, "distance spec")->required();
    check->add_option("--trials", check_trials, "random triples to draw");
    check->add_option("--seed", check_seed, "RNG seed");
    check->add_option("--dim", check_dim, "vector dimensionality");
    check->add_option("--tolerance", check_tol, "additive comparison tolerance");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "k-sweep evaluation over local datasets");
    std::string eval_dir, eval_out = "eval-out", eval_reference = "minkowski:p=0.5";
    std::vector<std::string> eval_specs;
    int eval_kmax = 200, eval_folds = 10;
    std::uint64_t eval_seed = 42;
    bool eval_per_k = false;
    eval_cmd->add_option("data_dir", eval_dir, "directory of .csv/.arff datasets")->required();
    eval_cmd->add_option("--specs", eval_specs, "distance specs (default: the 15-row list)");
    eval_cmd->add_option("--k-max", eval_kmax, "largest k to sweep")->check(CLI::PositiveNumber);
    eval_cmd->add_option("--folds", eval_folds, "cross-validation folds")
        ->check(CLI::Range(2, 1000000));
    eval_cmd->add_option("--seed", eval_seed, "fold-plan seed");
    eval_cmd->add_option("--reference", eval_reference, "spec for the p-value column");
    eval_cmd->add_option("--out", eval_out, "output directory");
    eval_cmd->add_flag("--per-k", eval_per_k, "also write the long-format per-k CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) return run_bench(bench_families, bench_D, bench_reps, bench_out);
        if (rings_cmd->parsed()) return run_rings(rings_family, rings_D, rings_format);
        if (render->parsed()) return run_render(render_spec, render_half, render_out);
        if (check->parsed())
            return run_metric_check(check_spec, check_trials, check_seed, check_dim, check_tol);
        if (eval_cmd->parsed())
            return run_eval(eval_dir, eval_specs, eval_kmax, eval_folds, eval_seed,
                            eval_reference, eval_out, eval_per_k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
