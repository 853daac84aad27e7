#include "fusionkit/group_table.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

namespace fusionkit {

GroupTable::GroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
    const std::size_t n = names_.size();
    if (n == 0) throw input_error("group table is empty");
    if (mul_.size() != n) throw input_error("multiplication table is not square");
    for (const auto& row : mul_) {
        if (row.size() != n) throw input_error("multiplication table is not square");
        for (std::size_t v : row)
            if (v >= n) throw input_error("multiplication table entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g)
        if (mul_[0][g] != g || mul_[g][0] != g)
            throw input_error("element 0 is not a two-sided identity");
    inv_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (mul_[g][h] == 0 && mul_[h][g] == 0) { inv_[g] = h; break; }
        if (inv_[g] == n) throw input_error("element " + std::to_string(g) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw input_error("multiplication table is not associative");
}

bool GroupTable::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

std::vector<std::vector<std::size_t>> GroupTable::conjugacy_classes() const {
    const std::size_t n = order();
    std::vector<bool> done(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t g = 0; g < n; ++g) {
        if (done[g]) continue;
        std::set<std::size_t> cls;
        for (std::size_t x = 0; x < n; ++x) cls.insert(mul(mul(x, g), inv(x)));
        std::vector<std::size_t> sorted(cls.begin(), cls.end());
        for (std::size_t e : sorted) done[e] = true;
        classes.push_back(std::move(sorted));
    }
    return classes; // g scans upward, so classes are already ordered by least member
}

std::vector<std::size_t> GroupTable::centralizer(std::size_t g) const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < order(); ++h)
        if (mul(h, g) == mul(g, h)) out.push_back(h);
    return out;
}

GroupTable GroupTable::subgroup(const std::vector<std::size_t>& elements) const {
    std::map<std::size_t, std::size_t> reindex;
    for (std::size_t i = 0; i < elements.size(); ++i) reindex[elements[i]] = i;
    if (!reindex.count(0) || reindex.at(0) != 0)
        throw input_error("subgroup must list the identity first");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> mul(elements.size(),
                                              std::vector<std::size_t>(elements.size()));
    for (std::size_t e : elements) names.push_back(name(e));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j) {
            auto it = reindex.find(this->mul(elements[i], elements[j]));
            if (it == reindex.end()) throw input_error("element set is not closed");
            mul[i][j] = it->second;
        }
    return GroupTable(std::move(names), std::move(mul));
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(std::size_t n) {
    if (n == 0) throw input_error("cyclic group order must be positive");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : "g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    }
    return GroupTable(std::move(names), std::move(mul));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    const std::size_t n = a.order() * b.order();
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    auto idx = [&](std::size_t x, std::size_t y) { return x * b.order() + y; };
    for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < b.order(); ++y)
            names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    for (std::size_t x1 = 0; x1 < a.order(); ++x1)
        for (std::size_t y1 = 0; y1 < b.order(); ++y1)
            for (std::size_t x2 = 0; x2 < a.order(); ++x2)
                for (std::size_t y2 = 0; y2 < b.order(); ++y2)
                    mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return GroupTable(std::move(names), std::move(mul));
}

GroupTable GroupTable::klein_four() { return direct_product(cyclic(2), cyclic(2)); }

GroupTable GroupTable::symmetric3() {
    // Permutations of {0,1,2}: identity, the two 3-cycles, the three transpositions.
    const std::array<std::array<std::size_t, 3>, 6> perms = {{
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
    }};
    const std::array<const char*, 6> names = {"e", "r", "r2", "s01", "s12", "s02"};
    auto compose = [&](std::size_t a, std::size_t b) {
        std::array<std::size_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (std::size_t p = 0; p < 6; ++p)
            if (perms[p] == c) return p;
        throw numeric_error("permutation composition fell outside S3");
    };
    std::vector<std::vector<std::size_t>> mul(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) mul[a][b] = compose(a, b);
    return GroupTable(std::vector<std::string>(names.begin(), names.end()), std::move(mul));
}

GroupTable GroupTable::by_name(const std::string& name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "s3") return symmetric3();
    if (key == "z2xz2" || key == "v4" || key == "klein") return klein_four();
    if (key.size() >= 2 && key[0] == 'z') {
        std::size_t n = 0;
        try {
            n = static_cast<std::size_t>(std::stoul(key.substr(1)));
        } catch (const std::exception&) {
            throw input_error("unknown group '" + name + "'");
        }
        if (n >= 1 && n <= 12) return cyclic(n);
    }
    throw input_error("unknown group '" + name + "'");
}

} // namespace fusionkit
