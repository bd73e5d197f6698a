#include "simplexramsey/ramseytoy.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sr {

namespace {

constexpr std::uint64_t kDefaultColoringCap = 1ull << 24;

// True when some subset of `allowed` points carries a congruent copy of a.
// Backtracks over a's vertices in order, exact distance matching.
bool has_copy(const RMatrix& r, const RMatrix& a, const std::vector<Eigen::Index>& allowed,
              std::vector<Eigen::Index>& image, std::vector<bool>& used, size_t depth) {
    const size_t n = static_cast<size_t>(a.rows());
    if (depth == n) return true;
    for (size_t c = 0; c < allowed.size(); ++c) {
        if (used[c]) continue;
        const Eigen::Index candidate = allowed[c];
        bool ok = true;
        for (size_t prev = 0; prev < depth && ok; ++prev)
            if (r(image[prev], candidate) != a(prev, depth)) ok = false;
        if (!ok) continue;
        image[depth] = candidate;
        used[c] = true;
        if (has_copy(r, a, allowed, image, used, depth + 1)) return true;
        used[c] = false;
    }
    return false;
}

bool monochromatic_copy_exists(const FiniteConfig& r, const SquaredDistanceMatrix& a,
                               const std::vector<int>& coloring, int q) {
    for (int color = 0; color < q; ++color) {
        std::vector<Eigen::Index> cls;
        for (Eigen::Index i = 0; i < r.size(); ++i)
            if (coloring[static_cast<size_t>(i)] == color) cls.push_back(i);
        if (cls.size() < static_cast<size_t>(a.size())) continue;
        std::vector<Eigen::Index> image(a.size());
        std::vector<bool> used(cls.size(), false);
        if (has_copy(r.sqdist, a.entries(), cls, image, used, 0)) return true;
    }
    return false;
}

void collect_copies(const RMatrix& r, const RMatrix& a, std::vector<Eigen::Index>& image,
                    std::vector<bool>& used, size_t depth,
                    std::vector<std::vector<Eigen::Index>>& out) {
    const size_t n = static_cast<size_t>(a.rows());
    if (depth == n) {
        out.push_back(image);
        return;
    }
    for (Eigen::Index candidate = 0; candidate < r.rows(); ++candidate) {
        if (used[static_cast<size_t>(candidate)]) continue;
        bool ok = true;
        for (size_t prev = 0; prev < depth && ok; ++prev)
            if (r(image[prev], candidate) != a(prev, depth)) ok = false;
        if (!ok) continue;
        image[depth] = candidate;
        used[static_cast<size_t>(candidate)] = true;
        collect_copies(r, a, image, used, depth + 1, out);
        used[static_cast<size_t>(candidate)] = false;
    }
}

}  // namespace

std::uint64_t coloring_cap() {
    if (const char* env = std::getenv("SIMPLEX_RAMSEY_COLOR_CAP")) {
        const unsigned long long parsed = std::strtoull(env, nullptr, 10);
        if (parsed > 0) return parsed;
    }
    return kDefaultColoringCap;
}

FiniteConfig config_from_sqdist(RMatrix sqdist, std::string label) {
    const Eigen::Index n = sqdist.rows();
    if (n < 1 || sqdist.cols() != n)
        throw InvalidDistanceMatrix("config matrix must be square and nonempty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (sqdist(i, i) != 0) throw InvalidDistanceMatrix("nonzero diagonal entry");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (sqdist(i, j) != sqdist(j, i)) throw InvalidDistanceMatrix("matrix not symmetric");
            if (sqdist(i, j) <= 0)
                throw InvalidDistanceMatrix("config points must be pairwise distinct");
        }
    }
    return FiniteConfig{std::move(sqdist), std::move(label)};
}

FiniteConfig config_from_matrix(const SquaredDistanceMatrix& m, std::string label) {
    return FiniteConfig{m.entries(), std::move(label)};
}

FiniteConfig regular_simplex_config(Eigen::Index k, const Rational& side_sq) {
    if (k < 1 || side_sq <= 0)
        throw std::invalid_argument("regular simplex needs k >= 1 and side_sq > 0");
    const Eigen::Index n = k + 1;
    RMatrix m = RMatrix::Constant(n, n, side_sq);
    m.diagonal().setZero();
    return FiniteConfig{std::move(m), "regular-" + std::to_string(k) + "-simplex"};
}

FiniteConfig pigeonhole_witness(Eigen::Index k, Eigen::Index q, const Rational& side_sq) {
    if (k < 1 || q < 1) throw std::invalid_argument("pigeonhole witness needs k, q >= 1");
    FiniteConfig c = regular_simplex_config(q * k, side_sq);
    c.label = "pigeonhole-witness(k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
    return c;
}

std::vector<std::vector<Eigen::Index>> congruent_copies(const FiniteConfig& r,
                                                        const SquaredDistanceMatrix& a) {
    if (a.size() > r.size()) throw std::invalid_argument("pattern larger than host config");
    std::vector<std::vector<Eigen::Index>> out;
    std::vector<Eigen::Index> image(a.size());
    std::vector<bool> used(static_cast<size_t>(r.size()), false);
    collect_copies(r.sqdist, a.entries(), image, used, 0, out);
    return out;
}

ArrowVerdict arrow_check(const FiniteConfig& r, const SquaredDistanceMatrix& a, int q,
                         std::uint64_t cap) {
    if (q < 1) throw std::invalid_argument("need at least one color");
    const Eigen::Index m = r.size();

    // Total space is q^m; infeasible when it exceeds the cap.
    std::uint64_t space = 1;
    bool overflow = false;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (space > cap / static_cast<std::uint64_t>(q)) {
            overflow = true;
            break;
        }
        space *= static_cast<std::uint64_t>(q);
    }
    if (overflow || space > cap) return ArrowVerdict{ArrowStatus::Infeasible, std::nullopt, 0};

    // Fix the first point's color: permuting color names preserves the
    // arrow property, and every coloring is a rename of one with color 0
    // first. Enumeration is lexicographic, so the first failure found is
    // the least witness.
    std::vector<int> coloring(static_cast<size_t>(m), 0);
    std::uint64_t checked = 0;
    while (true) {
        ++checked;
        if (!monochromatic_copy_exists(r, a, coloring, q)) {
            // Re-check the witness against the full copy list before
            // reporting it.
            for (const auto& copy : congruent_copies(r, a)) {
                bool mono = true;
                for (size_t v = 1; v < copy.size() && mono; ++v)
                    if (coloring[static_cast<size_t>(copy[v])] !=
                        coloring[static_cast<size_t>(copy[0])])
                        mono = false;
                if (mono) throw std::logic_error("witness re-check found a monochromatic copy");
            }
            return ArrowVerdict{ArrowStatus::Fails, coloring, checked};
        }
        // Mixed-radix increment over positions 1..m-1.
        Eigen::Index pos = m - 1;
        while (pos >= 1) {
            if (++coloring[static_cast<size_t>(pos)] < q) break;
            coloring[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) break;
    }
    return ArrowVerdict{ArrowStatus::Holds, std::nullopt, checked};
}

FiniteConfig product_config(const FiniteConfig& r1, const FiniteConfig& r2) {
    const Eigen::Index n1 = r1.size();
    const Eigen::Index n2 = r2.size();
    RMatrix m = RMatrix::Zero(n1 * n2, n1 * n2);
    for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index j = 0; j < n2; ++j)
            for (Eigen::Index k = 0; k < n1; ++k)
                for (Eigen::Index l = 0; l < n2; ++l) {
                    const Eigen::Index row = i * n2 + j;
                    const Eigen::Index col = k * n2 + l;
                    if (row != col) m(row, col) = r1.sqdist(i, k) + r2.sqdist(j, l);
                }
    return FiniteConfig{std::move(m), r1.label + " x " + r2.label};
}

}  // namespace sr
