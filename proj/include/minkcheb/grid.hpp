#ifndef MINKCHEB_GRID_HPP
#define MINKCHEB_GRID_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "minkcheb/metrics.hpp"

namespace minkcheb::grid {

/// Lattice offset relative to the centre pixel.
struct GridPoint {
    int x = 0;
    int y = 0;
    bool operator==(const GridPoint&) const = default;
};

struct RingBucket {
    int label = 0;
    std::vector<GridPoint> points;
};

enum class RingFamily { Chebyshev, Manhattan, Euclidean, Rodrigues };

const char* ring_family_name(RingFamily f);
RingFamily parse_ring_family(const std::string& name);

/// Materialized result of one iterator run up to distance bound D.
struct RingRun {
    RingFamily family = RingFamily::Chebyshev;
    int max_distance = 0;
    std::vector<RingBucket> buckets;

    std::size_t total_points() const;
};

// ---------------------------------------------------------------------------
// Streaming iterators. Each calls emit(label, dx, dy) for every offset, one
// bucket at a time, without materializing anything. No offset is emitted
// twice within a run and (0,0) is never emitted.
// ---------------------------------------------------------------------------

/// Square rings: bucket d holds the offsets with max(|dx|,|dy|) = d,
/// d = 1..D-1. Two rows and two clipped columns per ring.
template <class Emit>
void for_each_chebyshev_ring(int D, Emit&& emit) {
    for (int d = 1; d < D; ++d) {
        for (int l = -d; l <= d; ++l) {
            emit(d, l, -d);
            emit(d, l, d);
            if (l != d && l != -d) {
                emit(d, -d, l);
                emit(d, d, l);
            }
        }
    }
}

/// Diamond rings: bucket d holds the offsets with |dx|+|dy| = d. Four arms
/// walked in order, each dropping its final point (the next arm's start).
template <class Emit>
void for_each_manhattan_ring(int D, Emit&& emit) {
    for (int d = 1; d < D; ++d) {
        for (int g = 0; g < 4; ++g) {
            int xa = 0, ya = 0;
            switch (g) {
                case 0: xa = 0; ya = d; break;
                case 1: xa = d; ya = 0; break;
                case 2: xa = 0; ya = -d; break;
                case 3: xa = -d; ya = 0; break;
            }
            for (int l = 0; l < d; ++l) {
                emit(d, xa, ya);
                switch (g) {
                    case 0: xa += 1; ya -= 1; break;
                    case 1: xa -= 1; ya -= 1; break;
                    case 2: xa -= 1; ya += 1; break;
                    case 3: xa += 1; ya += 1; break;
                }
            }
        }
    }
}

/// Quantized circles: bucket d holds the offsets with
/// floor(sqrt(dx^2+dy^2)) = d. Scans only the outer rows |y| > d/2 plus the
/// mirrored columns for |x| > d/2, with an early break once the ring band in
/// a row has been passed.
template <class Emit>
void for_each_euclidean_ring(int D, Emit&& emit) {
    for (int d = 1; d < D; ++d) {
        const std::int64_t lo = std::int64_t(d) * d;
        const std::int64_t hi = std::int64_t(d + 1) * (d + 1);
        for (int ls = 0; 2 * ls < d; ++ls) {
            const int Y = d - ls;
            const std::int64_t Y2 = std::int64_t(Y) * Y;
            bool found_first = false;
            for (int l = d; l >= 0; --l) {
                bool finished = false;
                for (int ln = l;; ln -= 2 * l) {
                    const std::int64_t r = std::int64_t(ln) * ln + Y2;
                    const bool in_ring = r >= lo && r < hi;
                    if (in_ring) {
                        emit(d, ln, -Y);
                        emit(d, ln, Y);
                        found_first = true;
                        // columns mirror rows; emit only where the row scans
                        // (|y| > d/2) cannot reach, so no offset repeats
                        if (2 * std::abs(ln) <= d) {
                            emit(d, -Y, ln);
                            emit(d, Y, ln);
                        }
                    } else {
                        finished = found_first;
                    }
                    if (ln <= 0) break;
                }
                if (finished) break;
            }
        }
    }
}

/// Octagonal rings for the combined distance with w1 = w2 = p = 1. The
/// square shell at max-norm d is split into d+1 buckets: the 4 axis offsets
/// first, then the edge offsets ordered by min(|dx|,|dy|). Labels run
/// consecutively across shells.
template <class Emit>
void for_each_rodrigues_ring(int D, Emit&& emit) {
    int da = 1;
    for (int d = 1; d < D; ++d) {
        emit(da, d, 0);
        emit(da, -d, 0);
        emit(da, 0, d);
        emit(da, 0, -d);
        for (int l = 1; l < d; ++l) {
            const int label = da + l;
            emit(label, d, -l);
            emit(label, d, l);
            emit(label, -d, -l);
            emit(label, -d, l);
            emit(label, -l, d);
            emit(label, l, d);
            emit(label, -l, -d);
            emit(label, l, -d);
        }
        // l = d: only the four corners (the horizontal-edge points coincide)
        emit(da + d, d, -d);
        emit(da + d, d, d);
        emit(da + d, -d, -d);
        emit(da + d, -d, d);
        da += d + 1;
    }
}

// ---------------------------------------------------------------------------
// Materialized runs and oracle
// ---------------------------------------------------------------------------

RingRun chebyshev_rings(int D);
RingRun manhattan_rings(int D);
RingRun euclidean_rings(int D);
RingRun rodrigues_rings(int D);
RingRun rings(RingFamily family, int D);

/// Closed form of the octagonal iterator's bucket bookkeeping: with
/// m = max(|dx|,|dy|), s = min(|dx|,|dy|), the label is m(m+1)/2 + s.
int rodrigues_bucket_label(int dx, int dy);

/// True combined distance (w1 = w2 = p = 1) of an offset: (|dx|+|dy|) +
/// max(|dx|,|dy|).
inline int rodrigues_combined_distance(int dx, int dy) {
    return std::abs(dx) + std::abs(dy) + std::max(std::abs(dx), std::abs(dy));
}

/// Brute-force reference: scans the enclosing box, labels each offset
/// directly from its coordinates, and keeps the buckets an iterator bounded
/// by D must produce. Points are in row-major order.
RingRun oracle_rings(RingFamily family, int D);

/// Bucket-by-bucket set comparison; returns the first differing bucket
/// label, or nothing when equal.
struct RingMismatch {
    int label = 0;
    std::string detail;
};
std::optional<RingMismatch> compare_runs(const RingRun& a, const RingRun& b);

// ---------------------------------------------------------------------------
// Distance-field rendering
// ---------------------------------------------------------------------------

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    std::uint8_t at(int row, int col) const { return pixels[std::size_t(row) * width + col]; }
};

/// Renders the distance field of `spec` on a (2*half_size+1)^2 grid centred
/// at the origin, linearly rescaled to 0..255 (darkest at the centre).
GrayImage render_distance_field(const DistanceSpec& spec, int half_size);

/// Plain-text PGM ("P2") serialization.
std::string to_pgm(const GrayImage& image);

// ---------------------------------------------------------------------------
// Benchmark
// ---------------------------------------------------------------------------

struct TimingRecord {
    RingFamily family = RingFamily::Chebyshev;
    int D = 0;
    int repetitions = 0;
    double mean_seconds = 0.0;
    double min_seconds = 0.0;
    std::uint64_t points_per_run = 0;
    std::uint64_t checksum = 0;
};

/// Times `repetitions` full runs of the family's streaming iterator. Every
/// emitted offset is folded into a checksum so the loops cannot be
/// eliminated. Single-threaded; wall clock.
TimingRecord bench_rings(RingFamily family, int D, int repetitions);

/// CSV header and row format for timing output:
/// "family,D,repetitions,mean_seconds,min_seconds,points,checksum".
std::string timing_csv_header();
std::string timing_csv_row(const TimingRecord& rec);

}  // namespace minkcheb::grid

#endif
