#include "minkcheb/grid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minkcheb::grid {

namespace {

void require_bound(int D) {
    if (D < 1) throw std::invalid_argument("distance bound D must be >= 1");
}

template <class Iterate>
RingRun collect(RingFamily family, int D, Iterate&& iterate) {
    require_bound(D);
    RingRun run;
    run.family = family;
    run.max_distance = D;
    iterate(D, [&](int label, int dx, int dy) {
        if (run.buckets.empty() || run.buckets.back().label != label) {
            run.buckets.push_back(RingBucket{label, {}});
        }
        run.buckets.back().points.push_back(GridPoint{dx, dy});
    });
    return run;
}

int euclidean_floor_label(int dx, int dy) {
    std::int64_t r = std::int64_t(dx) * dx + std::int64_t(dy) * dy;
    int d = int(std::sqrt(double(r)));
    // repair floating-point slop around perfect squares
    while (std::int64_t(d) * d > r) --d;
    while (std::int64_t(d + 1) * (d + 1) <= r) ++d;
    return d;
}

std::string point_set_to_string(const std::vector<GridPoint>& pts, std::size_t limit = 8) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pts.size() && i < limit; ++i)
        out << "(" << pts[i].x << "," << pts[i].y << ") ";
    if (pts.size() > limit) out << "...";
    return out.str();
}

}  // namespace

const char* ring_family_name(RingFamily f) {
    switch (f) {
        case RingFamily::Chebyshev: return "chebyshev";
        case RingFamily::Manhattan: return "manhattan";
        case RingFamily::Euclidean: return "euclidean";
        case RingFamily::Rodrigues: return "rodrigues";
    }
    return "?";
}

RingFamily parse_ring_family(const std::string& name) {
    if (name == "chebyshev") return RingFamily::Chebyshev;
    if (name == "manhattan") return RingFamily::Manhattan;
    if (name == "euclidean") return RingFamily::Euclidean;
    if (name == "rodrigues") return RingFamily::Rodrigues;
    throw std::invalid_argument("unknown ring family: '" + name + "'");
}

std::size_t RingRun::total_points() const {
    std::size_t n = 0;
    for (const auto& b : buckets) n += b.points.size();
    return n;
}

RingRun chebyshev_rings(int D) {
    return collect(RingFamily::Chebyshev, D,
                   [](int bound, auto&& emit) { for_each_chebyshev_ring(bound, emit); });
}

RingRun manhattan_rings(int D) {
    return collect(RingFamily::Manhattan, D,
                   [](int bound, auto&& emit) { for_each_manhattan_ring(bound, emit); });
}

RingRun euclidean_rings(int D) {
    return collect(RingFamily::Euclidean, D,
                   [](int bound, auto&& emit) { for_each_euclidean_ring(bound, emit); });
}

RingRun rodrigues_rings(int D) {
    return collect(RingFamily::Rodrigues, D,
                   [](int bound, auto&& emit) { for_each_rodrigues_ring(bound, emit); });
}

RingRun rings(RingFamily family, int D) {
    switch (family) {
        case RingFamily::Chebyshev: return chebyshev_rings(D);
        case RingFamily::Manhattan: return manhattan_rings(D);
        case RingFamily::Euclidean: return euclidean_rings(D);
        case RingFamily::Rodrigues: return rodrigues_rings(D);
    }
    throw std::logic_error("unreachable ring family");
}

int rodrigues_bucket_label(int dx, int dy) {
    if (dx == 0 && dy == 0) throw std::invalid_argument("zero offset has no bucket");
    int m = std::max(std::abs(dx), std::abs(dy));
    int s = std::min(std::abs(dx), std::abs(dy));
    return m * (m + 1) / 2 + s;
}

RingRun oracle_rings(RingFamily family, int D) {
    require_bound(D);
    const int B = D - 1;  // every in-range bucket lies in the [-B, B]^2 box
    std::map<int, std::vector<GridPoint>> buckets;
    for (int y = -B; y <= B; ++y) {
        for (int x = -B; x <= B; ++x) {
            if (x == 0 && y == 0) continue;
            int label = 0;
            bool in_range = false;
            switch (family) {
                case RingFamily::Chebyshev:
                    label = std::max(std::abs(x), std::abs(y));
                    in_range = label < D;
                    break;
                case RingFamily::Manhattan:
                    label = std::abs(x) + std::abs(y);
                    in_range = label < D;
                    break;
                case RingFamily::Euclidean:
                    label = euclidean_floor_label(x, y);
                    in_range = label >= 1 && label < D;
                    break;
                case RingFamily::Rodrigues:
                    label = rodrigues_bucket_label(x, y);
                    // geometric shells with max-norm < D
                    in_range = std::max(std::abs(x), std::abs(y)) < D;
                    break;
            }
            if (in_range) buckets[label].push_back(GridPoint{x, y});
        }
    }
    RingRun run;
    run.family = family;
    run.max_distance = D;
    for (auto& [label, points] : buckets)
        run.buckets.push_back(RingBucket{label, std::move(points)});
    return run;
}

std::optional<RingMismatch> compare_runs(const RingRun& a, const RingRun& b) {
    auto as_sets = [](const RingRun& run) {
        std::map<int, std::set<std::pair<int, int>>> out;
        for (const auto& bucket : run.buckets)
            for (const auto& p : bucket.points)
                out[bucket.label].insert({p.x, p.y});
        return out;
    };
    auto sa = as_sets(a);
    auto sb = as_sets(b);
    for (const auto& [label, pts] : sa) {
        auto it = sb.find(label);
        if (it == sb.end())
            return RingMismatch{label, "bucket missing from second run"};
        if (it->second != pts)
            return RingMismatch{label, "bucket point sets differ"};
    }
    for (const auto& [label, pts] : sb) {
        if (!sa.count(label)) return RingMismatch{label, "bucket missing from first run"};
    }
    return std::nullopt;
}

GrayImage render_distance_field(const DistanceSpec& spec, int half_size) {
    if (half_size < 1) throw std::invalid_argument("half_size must be >= 1");
    spec.validate();

    const int side = 2 * half_size + 1;
    std::vector<double> field(std::size_t(side) * side);
    const FeatureVector centre{0.0, 0.0};
    double max_value = 0.0;
    for (int row = 0; row < side; ++row) {
        for (int col = 0; col < side; ++col) {
            FeatureVector point{double(col - half_size), double(row - half_size)};
            double d = distance(spec, centre, point);
            field[std::size_t(row) * side + col] = d;
            max_value = std::max(max_value, d);
        }
    }

    GrayImage image;
    image.width = side;
    image.height = side;
    image.pixels.resize(field.size());
    for (std::size_t i = 0; i < field.size(); ++i) {
        double scaled = max_value > 0.0 ? field[i] / max_value * 255.0 : 0.0;
        image.pixels[i] = std::uint8_t(std::lround(scaled));
    }
    return image;
}

std::string to_pgm(const GrayImage& image) {
    std::ostringstream out;
    out << "P2\n" << image.width << " " << image.height << "\n255\n";
    for (int row = 0; row < image.height; ++row) {
        for (int col = 0; col < image.width; ++col) {
            if (col) out << ' ';
            out << int(image.at(row, col));
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct BenchSink {
    std::uint64_t checksum = 0;
    std::uint64_t count = 0;

    void operator()(int label, int dx, int dy) {
        // per-point value is independent of the accumulator, so the fold
        // does not serialize the loop
        std::uint32_t v = std::uint32_t(dx) * 0x9E3779B1u ^
                          std::uint32_t(dy) * 0x85EBCA77u ^
                          std::uint32_t(label);
        checksum ^= std::uint64_t(v) << (count & 31u);
        ++count;
    }
};

}  // namespace

TimingRecord bench_rings(RingFamily family, int D, int repetitions) {
    require_bound(D);
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    TimingRecord rec;
    rec.family = family;
    rec.D = D;
    rec.repetitions = repetitions;
    rec.min_seconds = std::numeric_limits<double>::infinity();

    double total = 0.0;
    for (int r = 0; r < repetitions; ++r) {
        BenchSink sink;
        auto t0 = std::chrono::steady_clock::now();
        switch (family) {
            case RingFamily::Chebyshev: for_each_chebyshev_ring(D, sink); break;
            case RingFamily::Manhattan: for_each_manhattan_ring(D, sink); break;
            case RingFamily::Euclidean: for_each_euclidean_ring(D, sink); break;
            case RingFamily::Rodrigues: for_each_rodrigues_ring(D, sink); break;
        }
        auto t1 = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(t1 - t0).count();
        total += seconds;
        rec.min_seconds = std::min(rec.min_seconds, seconds);
        rec.points_per_run = sink.count;
        rec.checksum = sink.checksum;
    }
    rec.mean_seconds = total / repetitions;
    return rec;
}

std::string timing_csv_header() {
    return "family,D,repetitions,mean_seconds,min_seconds,points,checksum";
}

std::string timing_csv_row(const TimingRecord& rec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.9f,%.9f,%llu,%llu",
                  ring_family_name(rec.family), rec.D, rec.repetitions,
                  rec.mean_seconds, rec.min_seconds,
                  static_cast<unsigned long long>(rec.points_per_run),
                  static_cast<unsigned long long>(rec.checksum));
    return buf;
}

}  // namespace minkcheb::grid
