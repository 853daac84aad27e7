#include "fusionkit/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fusionkit/group_table.hpp"

namespace fusionkit {

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<std::size_t> dual,
                       Tensor tensor)
    : labels_(std::move(labels)), dual_(std::move(dual)), tensor_(std::move(tensor)) {
    if (labels_.empty())
        throw input_error("fusion ring needs at least one label");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw input_error("duplicate label '" + l + "'");
    if (dual_.size() != labels_.size())
        throw input_error("dual map has " + std::to_string(dual_.size()) +
                          " entries for " + std::to_string(labels_.size()) + " labels");
    for (std::size_t i = 0; i < dual_.size(); ++i)
        if (dual_[i] >= labels_.size())
            throw input_error("dual of label " + std::to_string(i) + " out of range");
    for (auto it = tensor_.begin(); it != tensor_.end();) {
        const auto& [key, mult] = *it;
        if (key[0] >= rank() || key[1] >= rank() || key[2] >= rank())
            throw input_error("tensor index out of range");
        if (mult < 0)
            throw input_error("negative multiplicity at (" + std::to_string(key[0]) + "," +
                              std::to_string(key[1]) + "," + std::to_string(key[2]) + ")");
        it = (mult == 0) ? tensor_.erase(it) : std::next(it);
    }
}

std::size_t FusionRing::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw input_error("unknown label '" + label + "'");
}

long long FusionRing::N(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = tensor_.find({i, j, k});
    return it == tensor_.end() ? 0 : it->second;
}

std::vector<std::vector<long long>> FusionRing::fusion_matrix(std::size_t i) const {
    std::vector<std::vector<long long>> m(rank(), std::vector<long long>(rank(), 0));
    for (const auto& [key, mult] : tensor_)
        if (key[0] == i) m[key[1]][key[2]] = mult;
    return m;
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

} // namespace

Report FusionRing::validate() const {
    Report report("fusion_ring.validate");
    const std::size_t n = rank();

    // unit: N_{0j}^k = delta_{jk}, N_{i0}^k = delta_{ik}
    {
        bool ok = true;
        std::vector<std::size_t> witness;
        std::string detail = "N_{0j}^k = delta_jk and N_{i0}^k = delta_ik";
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n && ok; ++k) {
                if (N(0, j, k) != (j == k ? 1 : 0)) { ok = false; witness = {0, j, k}; }
                else if (N(j, 0, k) != (j == k ? 1 : 0)) { ok = false; witness = {j, 0, k}; }
            }
        if (!ok) detail = "unit axiom fails at " + triple(witness[0], witness[1], witness[2]);
        report.add("unit", ok, detail, 0.0, witness);
    }

    // dual involution with fixed identity
    {
        bool ok = dual_[0] == 0;
        std::vector<std::size_t> witness;
        if (!ok) witness = {0};
        for (std::size_t i = 0; i < n && ok; ++i)
            if (dual_[dual_[i]] != i) { ok = false; witness = {i}; }
        report.add("dual_involution", ok,
                   ok ? "dual is an involution and fixes the identity"
                      : "dual involution fails at label " + std::to_string(witness[0]),
                   0.0, witness);
    }

    // conjugation detects the identity: N_{ij}^0 = delta_{j, dual(i)}
    {
        bool ok = true;
        std::vector<std::size_t> witness;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (N(i, j, 0) != (j == dual_[i] ? 1 : 0)) { ok = false; witness = {i, j, 0}; }
        report.add("conjugation", ok,
                   ok ? "N_{ij}^0 = delta_{j, dual(i)}"
                      : "conjugation axiom fails at " + triple(witness[0], witness[1], witness[2]),
                   0.0, witness);
    }

    // Frobenius reciprocity: N_{ij}^k = N_{dual(i) k}^j = N_{k dual(j)}^i,
    // checked over the support (a violation always has a nonzero side).
    {
        bool ok = true;
        std::vector<std::size_t> witness;
        for (const auto& [key, mult] : tensor_) {
            const auto [i, j, k] = key;
            if (N(dual_[i], k, j) != mult || N(k, dual_[j], i) != mult) {
                ok = false;
                witness = {i, j, k};
                break;
            }
        }
        report.add("frobenius", ok,
                   ok ? "N_{ij}^k = N_{ik'}^j = N_{kj'}^i over all triples"
                      : "Frobenius reciprocity fails at " + triple(witness[0], witness[1], witness[2]),
                   0.0, witness);
    }

    // associativity: sum_m N_{ij}^m N_{mk}^l = sum_m N_{jk}^m N_{im}^l
    {
        bool ok = true;
        std::vector<std::size_t> witness;
        // row[i][j][k] = N_{ij}^k over the support only
        std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, long long>>>> rows(n);
        for (const auto& [key, mult] : tensor_)
            rows[key[0]][key[1]].push_back({key[2], mult});
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                // lhs[k][l] = sum_m N_{ij}^m N_{mk}^l
                std::map<std::pair<std::size_t, std::size_t>, long long> lhs, rhs;
                if (auto it = rows[i].find(j); it != rows[i].end())
                    for (auto [m, c1] : it->second)
                        for (const auto& [k, row] : rows[m])
                            for (auto [l, c2] : row) lhs[{k, l}] += c1 * c2;
                for (std::size_t k = 0; k < n; ++k)
                    if (auto it = rows[j].find(k); it != rows[j].end())
                        for (auto [m, c1] : it->second)
                            if (auto it2 = rows[i].find(m); it2 != rows[i].end())
                                for (auto [l, c2] : it2->second) rhs[{k, l}] += c1 * c2;
                if (lhs != rhs) {
                    ok = false;
                    // locate a differing (k,l) for the counterexample
                    for (std::size_t k = 0; k < n && witness.empty(); ++k)
                        for (std::size_t l = 0; l < n && witness.empty(); ++l) {
                            long long a = lhs.count({k, l}) ? lhs[{k, l}] : 0;
                            long long b = rhs.count({k, l}) ? rhs[{k, l}] : 0;
                            if (a != b) witness = {i, j, k, l};
                        }
                }
            }
        std::string detail = "sum_m N_{ij}^m N_{mk}^l = sum_m N_{jk}^m N_{im}^l";
        if (!ok) {
            std::ostringstream os;
            os << "associativity fails at (i,j,k,l) = (" << witness[0] << "," << witness[1]
               << "," << witness[2] << "," << witness[3] << ")";
            detail = os.str();
        }
        report.add("associativity", ok, detail, 0.0, witness);
    }

    return report;
}

FormalSum FusionRing::fuse(std::size_t a, std::size_t b) const {
    if (a >= rank() || b >= rank()) throw input_error("label index out of range");
    FormalSum out;
    for (auto it = tensor_.lower_bound({a, b, 0});
         it != tensor_.end() && it->first[0] == a && it->first[1] == b; ++it)
        out[it->first[2]] = it->second;
    return out;
}

FormalSum FusionRing::fuse(const FormalSum& a, const FormalSum& b) const {
    FormalSum out;
    for (const auto& [i, ca] : a) {
        if (i >= rank()) throw input_error("label index out of range");
        for (const auto& [j, cb] : b) {
            if (j >= rank()) throw input_error("label index out of range");
            // entries (i, j, *) are contiguous in the key ordering
            for (auto it = tensor_.lower_bound({i, j, 0});
                 it != tensor_.end() && it->first[0] == i && it->first[1] == j; ++it)
                out[it->first[2]] += ca * cb * it->second;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

WeightedSum FusionRing::fuse(const WeightedSum& a, const WeightedSum& b) const {
    WeightedSum out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b)
            for (auto it = tensor_.lower_bound({i, j, 0});
                 it != tensor_.end() && it->first[0] == i && it->first[1] == j; ++it)
                out[it->first[2]] += ca * cb * static_cast<double>(it->second);
    return out;
}

namespace {

// Largest eigenvalue of the symmetric nonnegative matrix M by power iteration.
double power_iteration(const std::vector<std::vector<double>>& M, int max_iter, double eps,
                       int& iterations) {
    const std::size_t n = M.size();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n);
    double lambda = 0.0;
    for (iterations = 1; iterations <= max_iter; ++iterations) {
        double norm2 = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < n; ++c) s += M[r][c] * v[c];
            w[r] = s;
            norm2 += s * s;
        }
        double next = 0.0;
        for (std::size_t r = 0; r < n; ++r) next += v[r] * w[r]; // Rayleigh quotient
        if (norm2 == 0.0) return 0.0;
        double norm = std::sqrt(norm2);
        for (std::size_t r = 0; r < n; ++r) v[r] = w[r] / norm;
        if (iterations > 1 && std::abs(next - lambda) <= eps * std::max(1.0, std::abs(next)))
            return next;
        lambda = next;
    }
    throw numeric_error("power iteration did not converge within " + std::to_string(max_iter) +
                        " iterations");
}

} // namespace

DimensionVector FusionRing::dims(double tolerance) const {
    const std::size_t n = rank();
    DimensionVector dv;
    dv.tolerance = tolerance;
    dv.d.resize(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        // d_i = ||N_i|| = sqrt of the top eigenvalue of the symmetric matrix
        // N_i N_i^T (equal to N_i N_{dual(i)} by Frobenius reciprocity), which
        // the power iteration handles without peripheral-spectrum stalls.
        auto Ni = fusion_matrix(i);
        std::vector<std::vector<double>> M(n, std::vector<double>(n, 0.0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                double s = 0.0;
                for (std::size_t m = 0; m < n; ++m)
                    s += static_cast<double>(Ni[r][m]) * static_cast<double>(Ni[c][m]);
                M[r][c] = s;
            }
        int iterations = 0;
        double lambda = power_iteration(M, 10000, 1e-12, iterations);
        dv.d[i] = std::sqrt(std::max(lambda, 0.0));
    }
    return dv;
}

double FusionRing::global_index() const {
    auto dv = dims();
    double s = 0.0;
    for (double d : dv.d) s += d * d;
    return s;
}

Grading FusionRing::grading() const {
    const std::size_t n = rank();

    // Adjoint closure: components of all i * dual(i), closed under fusion and duals.
    std::set<std::size_t> adjoint;
    adjoint.insert(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (N(i, dual_[i], k) != 0) adjoint.insert(k);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(adjoint.begin(), adjoint.end());
        for (std::size_t a : cur) {
            if (adjoint.insert(dual_[a]).second) grew = true;
            for (std::size_t b : cur)
                for (std::size_t k = 0; k < n; ++k)
                    if (N(a, b, k) != 0 && adjoint.insert(k).second) grew = true;
        }
    }

    // Components: j ~ j' iff N_{aj}^{j'} != 0 for some adjoint a.
    Grading g;
    g.component_of.assign(n, static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < n; ++j) {
        if (g.component_of[j] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> comp;
        for (std::size_t a : adjoint)
            for (std::size_t k = 0; k < n; ++k)
                if (N(a, j, k) != 0 && g.component_of[k] == static_cast<std::size_t>(-1)) {
                    g.component_of[k] = g.components.size();
                    comp.push_back(k);
                }
        std::sort(comp.begin(), comp.end());
        g.components.push_back(std::move(comp));
    }
    // j = 0 is processed first, so the identity component already sits at index 0.

    const std::size_t order = g.components.size();
    g.group_mul.assign(order, std::vector<std::size_t>(order, 0));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            std::size_t i = g.components[a].front();
            std::size_t j = g.components[b].front();
            std::size_t prod = static_cast<std::size_t>(-1);
            for (std::size_t k = 0; k < n; ++k)
                if (N(i, j, k) != 0) {
                    if (prod == static_cast<std::size_t>(-1)) prod = g.component_of[k];
                    else if (prod != g.component_of[k])
                        throw numeric_error("grading product not well-defined; ring is not graded");
                }
            if (prod == static_cast<std::size_t>(-1))
                throw numeric_error("empty fusion product in grading computation");
            g.group_mul[a][b] = prod;
        }
    return g;
}

GroupTable FusionRing::grading_group() const {
    Grading g = grading();
    std::vector<std::string> names;
    names.reserve(g.order());
    for (std::size_t c = 0; c < g.order(); ++c) names.push_back("g" + std::to_string(c));
    return GroupTable(names, g.group_mul);
}

FormalSum parse_combination(const FusionRing& ring, const std::string& text) {
    FormalSum out;
    std::string term;
    std::istringstream in(text);
    while (std::getline(in, term, '+')) {
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        term = trim(term);
        if (term.empty()) throw input_error("empty term in combination '" + text + "'");
        long long coeff = 1;
        std::string label = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            try {
                coeff = std::stoll(trim(term.substr(0, star)));
            } catch (const std::exception&) {
                throw input_error("bad coefficient in term '" + term + "'");
            }
            if (coeff < 0) throw input_error("negative coefficient in term '" + term + "'");
            label = trim(term.substr(star + 1));
        }
        out[ring.index_of(label)] += coeff;
    }
    return out;
}

} // namespace fusionkit
