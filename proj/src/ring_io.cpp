#include "fusionkit/ring_io.hpp"

#include <fstream>

namespace fusionkit {

namespace {

std::complex<double> complex_from(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw input_error("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json complex_to(std::complex<double> z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

} // namespace

RingFile ring_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("ring file must be a JSON object");
    if (!j.contains("labels") || !j["labels"].is_array())
        throw input_error("ring file needs a 'labels' array");
    if (!j.contains("dual") || !j["dual"].is_array())
        throw input_error("ring file needs a 'dual' array");

    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw input_error("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const std::size_t n = labels.size();

    std::vector<std::size_t> dual;
    for (const auto& d : j["dual"]) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw input_error("dual entries must be nonnegative integers");
        dual.push_back(static_cast<std::size_t>(d.get<long long>()));
    }

    FusionRing::Tensor tensor;
    if (j.contains("tensor")) {
        if (!j["tensor"].is_array()) throw input_error("'tensor' must be an array");
        for (const auto& entry : j["tensor"]) {
            if (!entry.is_array() || entry.size() != 4)
                throw input_error("tensor entries must be [i, j, k, mult]");
            for (const auto& v : entry)
                if (!v.is_number_integer()) throw input_error("tensor entries must be integers");
            long long i = entry[0].get<long long>(), jj = entry[1].get<long long>(),
                      k = entry[2].get<long long>(), mult = entry[3].get<long long>();
            if (i < 0 || jj < 0 || k < 0 || i >= static_cast<long long>(n) ||
                jj >= static_cast<long long>(n) || k >= static_cast<long long>(n))
                throw input_error("tensor index out of range");
            if (mult < 0) throw input_error("tensor multiplicities must be nonnegative");
            FusionRing::TensorKey key{static_cast<std::size_t>(i), static_cast<std::size_t>(jj),
                                      static_cast<std::size_t>(k)};
            if (auto it = tensor.find(key); it != tensor.end() && it->second != mult)
                throw input_error("conflicting duplicate tensor entries at (" + std::to_string(i) +
                                  "," + std::to_string(jj) + "," + std::to_string(k) + ")");
            tensor[key] = mult;
        }
    }

    // Insert the implied unit entries; explicit entries must agree with them.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            long long want = (a == b) ? 1 : 0;
            for (FusionRing::TensorKey key : {FusionRing::TensorKey{0, a, b},
                                              FusionRing::TensorKey{a, 0, b}}) {
                auto it = tensor.find(key);
                if (it != tensor.end() && it->second != want)
                    throw input_error("explicit entry at (" + std::to_string(key[0]) + "," +
                                      std::to_string(key[1]) + "," + std::to_string(key[2]) +
                                      ") contradicts the unit axiom");
                if (want == 1) tensor[key] = 1;
            }
        }

    RingFile out{FusionRing(std::move(labels), std::move(dual), std::move(tensor)), std::nullopt};

    if (j.contains("modular")) {
        const auto& m = j["modular"];
        if (!m.is_object() || !m.contains("S") || !m.contains("T"))
            throw input_error("'modular' block needs 'S' and 'T'");
        const auto& js = m["S"];
        const auto& jt = m["T"];
        if (!js.is_array() || js.size() != n) throw input_error("S must be a square matrix over the labels");
        ModularData md;
        md.S.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r) {
            if (!js[r].is_array() || js[r].size() != n)
                throw input_error("S must be a square matrix over the labels");
            for (std::size_t c = 0; c < n; ++c)
                md.S(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from(js[r][c]);
        }
        if (!jt.is_array() || jt.size() != n)
            throw input_error("T must be the diagonal over the labels");
        md.T.resize(static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r)
            md.T(static_cast<Eigen::Index>(r)) = complex_from(jt[r]);
        out.modular = std::move(md);
    }
    return out;
}

RingFile load_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return ring_from_json(j);
}

nlohmann::json ring_to_json(const FusionRing& ring, const std::optional<ModularData>& modular) {
    nlohmann::json j;
    j["labels"] = ring.labels();
    j["dual"] = ring.dual_map();
    j["tensor"] = nlohmann::json::array();
    for (const auto& [key, mult] : ring.tensor()) {
        if (key[0] == 0 || key[1] == 0) continue; // unit entries are implied
        j["tensor"].push_back({key[0], key[1], key[2], mult});
    }
    if (modular) {
        nlohmann::json m;
        const std::size_t n = modular->rank();
        m["S"] = nlohmann::json::array();
        for (std::size_t r = 0; r < n; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < n; ++c)
                row.push_back(complex_to(modular->S(static_cast<Eigen::Index>(r),
                                                    static_cast<Eigen::Index>(c))));
            m["S"].push_back(row);
        }
        m["T"] = nlohmann::json::array();
        for (std::size_t r = 0; r < n; ++r)
            m["T"].push_back(complex_to(modular->T(static_cast<Eigen::Index>(r))));
        j["modular"] = m;
    }
    return j;
}

GroupTable group_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        throw input_error("group file needs 'order' and 'mul'");
    if (!j["order"].is_number_integer() || j["order"].get<long long>() < 0)
        throw input_error("'order' must be a nonnegative integer");
    std::size_t n = static_cast<std::size_t>(j["order"].get<long long>());
    if (!j["mul"].is_array() || j["mul"].size() != n)
        throw input_error("'mul' must be an order x order table");
    std::vector<std::vector<std::size_t>> mul;
    for (const auto& row : j["mul"]) {
        if (!row.is_array() || row.size() != n)
            throw input_error("'mul' must be an order x order table");
        std::vector<std::size_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw input_error("'mul' entries must be nonnegative integers");
            r.push_back(static_cast<std::size_t>(v.get<long long>()));
        }
        mul.push_back(std::move(r));
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t g = 0; g < n; ++g) names.push_back(g == 0 ? "e" : "g" + std::to_string(g));
    return GroupTable(std::move(names), std::move(mul));
}

GroupTable load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return group_from_json(j);
}

nlohmann::json group_to_json(const GroupTable& g) {
    nlohmann::json j;
    j["order"] = g.order();
    j["mul"] = nlohmann::json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        j["mul"].push_back(row);
    }
    return j;
}

} // namespace fusionkit
