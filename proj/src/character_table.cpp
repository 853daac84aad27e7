#include "fusionkit/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace fusionkit {

namespace {

// Class multiplication coefficients a_{ij}^k: number of ways an element of
// class k factors as (class i element) * (class j element).
std::vector<Eigen::MatrixXd> class_matrices(const GroupTable& G,
                                            const std::vector<std::vector<std::size_t>>& classes,
                                            const std::vector<std::size_t>& class_of) {
    const std::size_t r = classes.size();
    std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<long long> count(r, 0);
            for (std::size_t x : classes[i])
                for (std::size_t y : classes[j]) ++count[class_of[G.mul(x, y)]];
            for (std::size_t k = 0; k < r; ++k) {
                // count[k] = a_{ij}^k * |class k| aggregated over the class;
                // divide back to the per-representative coefficient.
                M[i](j, k) = static_cast<double>(count[k]) / static_cast<double>(classes[k].size());
            }
        }
    return M;
}

} // namespace

CharacterTable character_table(const GroupTable& G, std::uint64_t seed) {
    CharacterTable table;
    table.classes = G.conjugacy_classes();
    const std::size_t r = table.classes.size();
    table.class_of.assign(G.order(), 0);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t g : table.classes[c]) table.class_of[g] = c;

    auto M = class_matrices(G, table.classes, table.class_of);

    // Central characters are the common eigenvectors of the (commuting) class
    // matrices; a generic real combination separates them.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.25, 1.0);
    const int max_tries = 64;
    Eigen::MatrixXcd vectors;
    bool ok = false;
    for (int attempt = 0; attempt < max_tries && !ok; ++attempt) {
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
        for (std::size_t i = 0; i < r; ++i) combo += unif(rng) * M[i];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<std::complex<double>>());
        if (solver.info() != Eigen::Success) continue;
        // reject clustered eigenvalues: the eigenvectors would not be canonical
        bool separated = true;
        for (std::size_t a = 0; a < r && separated; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                if (std::abs(solver.eigenvalues()(a) - solver.eigenvalues()(b)) < 1e-7) {
                    separated = false;
                    break;
                }
        if (!separated) continue;
        vectors = solver.eigenvectors();
        // each eigenvector must be a common eigenvector of every class matrix
        bool common = true;
        for (std::size_t i = 0; i < r && common; ++i)
            for (std::size_t v = 0; v < r && common; ++v) {
                Eigen::VectorXcd col = vectors.col(v);
                Eigen::VectorXcd img = M[i].cast<std::complex<double>>() * col;
                std::complex<double> scale = col.dot(img) / col.dot(col);
                if ((img - scale * col).norm() > 1e-8 * std::max(1.0, img.norm())) common = false;
            }
        ok = common;
    }
    if (!ok)
        throw numeric_error("Burnside-Dixon iteration cap reached without a separating combination");

    // Recover characters from central characters.
    const std::size_t id_class = table.class_of[0];
    std::vector<std::pair<std::vector<double>, std::vector<std::complex<double>>>> rows;
    for (std::size_t v = 0; v < r; ++v) {
        Eigen::VectorXcd w = vectors.col(v);
        if (std::abs(w(id_class)) < 1e-12)
            throw numeric_error("central character vanishes on the identity class");
        w /= w(id_class);
        double inv_sum = 0.0;
        for (std::size_t k = 0; k < r; ++k)
            inv_sum += std::norm(w(k)) / static_cast<double>(table.classes[k].size());
        double degree = std::sqrt(static_cast<double>(G.order()) / inv_sum);
        long long deg = std::llround(degree);
        if (deg < 1 || std::abs(degree - static_cast<double>(deg)) > 1e-6)
            throw numeric_error("character degree is not a positive integer");
        std::vector<std::complex<double>> values(r);
        for (std::size_t k = 0; k < r; ++k)
            values[k] = w(k) * static_cast<double>(deg) / static_cast<double>(table.classes[k].size());
        // sort key: degree, then rounded values
        std::vector<double> key{static_cast<double>(deg)};
        for (const auto& z : values) {
            key.push_back(std::round(z.real() * 1e6) / 1e6);
            key.push_back(std::round(z.imag() * 1e6) / 1e6);
        }
        rows.push_back({std::move(key), std::move(values)});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // the trivial character (all ones) sorts within degree 1; pin it to row 0
    auto is_trivial = [&](const auto& row) {
        for (const auto& z : row.second)
            if (std::abs(z - std::complex<double>(1.0, 0.0)) > 1e-8) return false;
        return true;
    };
    for (std::size_t v = 0; v < rows.size(); ++v)
        if (is_trivial(rows[v])) {
            std::rotate(rows.begin(), rows.begin() + v, rows.begin() + v + 1);
            break;
        }

    table.chi.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    table.degrees.clear();
    for (std::size_t v = 0; v < r; ++v) {
        table.degrees.push_back(std::llround(rows[v].first[0]));
        for (std::size_t k = 0; k < r; ++k)
            table.chi(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k)) = rows[v].second[k];
    }

    // Row orthogonality: sum_k |C_k| chi_a(k) conj(chi_b(k)) = |G| delta_ab.
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            std::complex<double> acc = 0.0;
            for (std::size_t k = 0; k < r; ++k)
                acc += static_cast<double>(table.classes[k].size()) *
                       table.chi(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(k)) *
                       std::conj(table.chi(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(k)));
            double want = (a == b) ? static_cast<double>(G.order()) : 0.0;
            if (std::abs(acc - want) > 1e-7 * G.order())
                throw numeric_error("character table fails row orthogonality");
        }
    return table;
}

} // namespace fusionkit
