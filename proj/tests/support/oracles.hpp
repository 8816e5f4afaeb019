#pragma once

// Brute-force reference implementations the tests compare the library
// against, plus portable random data helpers. Everything here favors the
// most literal formulation over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "framestylo/classifier.hpp"
#include "framestylo/matrix.hpp"
#include "framestylo/selection.hpp"
#include "framestylo/tight_frame.hpp"

namespace oracles {

using framestylo::Boundary;
using framestylo::GrayImage;
using framestylo::Kernel;
using framestylo::Label;
using framestylo::Matrix;

inline std::size_t wrap_index(long i, long n, Boundary boundary) {
    if (i >= 0 && i < n) return static_cast<std::size_t>(i);
    if (boundary == Boundary::Circular) {
        return static_cast<std::size_t>(((i % n) + n) % n);
    }
    return static_cast<std::size_t>(i < 0 ? 0 : n - 1);
}

// Direct convolution sum out(r,c) = sum_{u,v} k(u+1,v+1) x(r-u, c-v),
// written without the flip-then-correlate shortcut.
inline Matrix reference_convolve(const Matrix& x, const Kernel& kernel,
                                 Boundary boundary) {
    const long rows = static_cast<long>(x.rows());
    const long cols = static_cast<long>(x.cols());
    Matrix out(x.rows(), x.cols());
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            double sum = 0.0;
            for (long u = -1; u <= 1; ++u) {
                for (long v = -1; v <= 1; ++v) {
                    const double k = kernel.coefficients[static_cast<std::size_t>(
                        u + 1)][static_cast<std::size_t>(v + 1)];
                    sum += k * x(wrap_index(r - u, rows, boundary),
                                 wrap_index(c - v, cols, boundary));
                }
            }
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = sum;
        }
    }
    return out;
}

struct ReferenceStats {
    double mean;
    double std;
    double tail_pct;
};

inline ReferenceStats reference_stats(const Matrix& m) {
    const std::size_t n = m.rows() * m.cols();
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) sum += m(r, c);
    }
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            sq += (m(r, c) - mean) * (m(r, c) - mean);
        }
    }
    const double sd = std::sqrt(sq / static_cast<double>(n - 1));
    std::size_t tail = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (std::fabs(m(r, c) - mean) > sd) ++tail;
        }
    }
    return {mean, sd, static_cast<double>(tail) / static_cast<double>(n)};
}

// Mann-Whitney pair counting: a (vG, nvG) pair scores 2 when the vG distance
// is strictly smaller, 1 on a tie. Shares the integer numerator/denominator
// shape with the library so agreement must be exact, not approximate.
inline double pair_count_auc(const std::vector<double>& d,
                             const std::vector<Label>& labels) {
    unsigned long long num2 = 0, pos = 0, neg = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (labels[i] != Label::Vg) continue;
        ++pos;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (labels[j] == Label::Vg) continue;
            if (d[i] < d[j]) num2 += 2;
            else if (d[i] == d[j]) num2 += 1;
        }
    }
    for (Label l : labels) {
        if (l != Label::Vg) ++neg;
    }
    return static_cast<double>(num2) /
           (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
}

// Accuracy of the rule "vG iff distance < threshold", counted directly.
inline double threshold_accuracy(const std::vector<double>& d,
                                 const std::vector<Label>& labels,
                                 double threshold) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const bool says_vg = d[i] < threshold;
        if (says_vg == (labels[i] == Label::Vg)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(d.size());
}

// All 2n+1 candidate thresholds: each observed value, each midpoint between
// sorted neighbors, and one beyond each extreme.
inline std::vector<double> candidate_thresholds(std::vector<double> d) {
    std::sort(d.begin(), d.end());
    std::vector<double> t;
    t.push_back(d.front() - 1.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        t.push_back(d[i]);
        if (i + 1 < d.size()) t.push_back((d[i] + d[i + 1]) / 2.0);
    }
    t.push_back(d.back() + 1.0);
    return t;
}

inline double best_threshold_accuracy(const std::vector<double>& d,
                                      const std::vector<Label>& labels) {
    double best = 0.0;
    for (double t : candidate_thresholds(d)) {
        best = std::max(best, threshold_accuracy(d, labels, t));
    }
    return best;
}

// Independent enumeration of the sorted-cut rule: accuracy of every cut that
// a midpoint threshold can realize, keeping the largest optimal cut. Returns
// (delta, accuracy, number of optimal cuts).
struct CutScan {
    double delta;
    double accuracy;
    std::size_t optimal_cuts;
};

inline CutScan scan_cuts(std::vector<double> d, const std::vector<Label>& labels) {
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    CutScan best{0.0, -1.0, 0};
    for (std::size_t j = 1; j <= n + 1; ++j) {
        if (j >= 2 && j <= n && !(d[order[j - 2]] < d[order[j - 1]])) continue;
        const double lo = (j == 1) ? 0.0 : d[order[j - 2]];
        const double hi = (j == n + 1) ? d[order[n - 1]] + 1.0 : d[order[j - 1]];
        const double delta = (lo + hi) / 2.0;
        const double acc = threshold_accuracy(d, labels, delta);
        if (acc > best.accuracy) {
            best = {delta, acc, 1};
        } else if (acc == best.accuracy) {
            best.delta = delta;  // larger j wins
            best.optimal_cuts++;
        }
    }
    return best;
}

// --- random data -----------------------------------------------------------

// mt19937_64 draws are standardized; the [0,1) mapping and Box-Muller below
// avoid std::uniform_real_distribution / std::normal_distribution, whose
// outputs differ between standard libraries.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() {  // in (0, 1)
        return (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
    }

    double normal(double mean = 0.0, double sd = 1.0) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double z =
            std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sd * z;
    }

    std::uint64_t below(std::uint64_t n) { return eng() % n; }
};

inline GrayImage random_image(Rng& rng, std::size_t rows, std::size_t cols,
                              double lo = 0.0, double hi = 255.0) {
    GrayImage img(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            img(r, c) = lo + (hi - lo) * rng.uniform();
        }
    }
    return img;
}

// Synthetic authentication dataset: `vg_count` rows form a tight cluster in
// the planted columns, `nvg_count` rows sit far away with inflated spread,
// and every other column is identically distributed noise for both classes.
inline framestylo::TrainingSet synthetic_dataset(
    std::size_t vg_count, std::size_t nvg_count, std::size_t dim,
    const std::vector<std::size_t>& planted, std::uint64_t seed,
    double gap = 2.2, double vg_std = 0.35, double nvg_std = 1.6) {
    Rng rng(seed);
    framestylo::TrainingSet out;
    std::vector<bool> is_planted(dim, false);
    for (std::size_t j : planted) is_planted[j] = true;

    for (std::size_t i = 0; i < vg_count + nvg_count; ++i) {
        const bool vg = i < vg_count;
        std::vector<double> row(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!is_planted[j]) {
                row[j] = rng.normal(0.0, 1.0);
            } else if (vg) {
                row[j] = rng.normal(0.0, vg_std);
            } else {
                row[j] = rng.normal(gap, nvg_std);
            }
        }
        out.ids.push_back((vg ? "vg_" : "nvg_") + std::to_string(i));
        out.labels.push_back(vg ? Label::Vg : Label::NonVg);
        out.x.push_back(std::move(row));
    }
    return out;
}

// Variant where outlier i deviates in exactly one planted column
// (round-robin), so no strict subset of the planted columns separates the
// classes and selection has to collect all of them.
inline framestylo::TrainingSet structured_outlier_dataset(
    std::size_t vg_count, std::size_t nvg_count, std::size_t dim,
    const std::vector<std::size_t>& planted, std::uint64_t seed,
    double gap = 3.5, double vg_std = 0.2, double nvg_std = 0.5) {
    Rng rng(seed);
    framestylo::TrainingSet out;
    std::vector<bool> is_planted(dim, false);
    for (std::size_t j : planted) is_planted[j] = true;

    for (std::size_t i = 0; i < vg_count + nvg_count; ++i) {
        const bool vg = i < vg_count;
        const std::size_t hot =
            vg ? dim : planted[(i - vg_count) % planted.size()];
        std::vector<double> row(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!is_planted[j]) {
                row[j] = rng.normal(0.0, 1.0);
            } else if (j == hot) {
                row[j] = rng.normal(gap, nvg_std);
            } else {
                row[j] = rng.normal(0.0, vg_std);
            }
        }
        out.ids.push_back((vg ? "vg_" : "nvg_") + std::to_string(i));
        out.labels.push_back(vg ? Label::Vg : Label::NonVg);
        out.x.push_back(std::move(row));
    }

    // Standardize every nuisance column within each class so that chance
    // class-level location/scale differences cannot masquerade as signal.
    for (std::size_t j = 0; j < dim; ++j) {
        if (is_planted[j]) continue;
        for (std::size_t lo : {std::size_t{0}, vg_count}) {
            const std::size_t hi = (lo == 0) ? vg_count : vg_count + nvg_count;
            double mean = 0.0;
            for (std::size_t i = lo; i < hi; ++i) mean += out.x[i][j];
            mean /= static_cast<double>(hi - lo);
            double var = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                const double d = out.x[i][j] - mean;
                var += d * d;
            }
            const double std_dev =
                std::sqrt(var / static_cast<double>(hi - lo - 1));
            for (std::size_t i = lo; i < hi; ++i) {
                out.x[i][j] = (out.x[i][j] - mean) / std_dev;
            }
        }
    }
    return out;
}

} // namespace oracles
