#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "systems.hpp"

namespace lvmb {

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk unit of work: a fundamental set with its configuration, plus an
// optional integer basis and provenance metadata. Rationals travel as
// strings so nothing is ever rounded.
struct SystemDocument {
    FundamentalSet eps;
    Configuration lam;
    std::optional<std::vector<std::vector<long>>> basis;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
};

inline bool operator==(const SystemDocument& a, const SystemDocument& b) {
    return a.eps == b.eps && a.lam == b.lam && a.basis == b.basis &&
           a.name == b.name && a.seed == b.seed;
}

namespace detail {

using OrderedJson = nlohmann::ordered_json;

inline long doc_int(const OrderedJson& v, const std::string& where) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw DocumentError(where + ": expected an integer, got " + v.dump());
    return v.get<long>();
}

inline Rational doc_rational(const OrderedJson& v, const std::string& where) {
    if (!v.is_string())
        throw DocumentError(where +
                            ": rationals must be strings like \"3/4\", got " + v.dump());
    try {
        return rational_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw DocumentError(where + ": " + e.what());
    }
}

}  // namespace detail

inline SystemDocument document_from_json(const std::string& text) {
    detail::OrderedJson j;
    try {
        j = detail::OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("document root must be an object");
    for (const char* key : {"m", "n", "epsilon", "lambda"})
        if (!j.contains(key)) throw DocumentError(std::string("missing field: ") + key);

    long m = detail::doc_int(j["m"], "m");
    long n = detail::doc_int(j["n"], "n");
    if (m < 1) throw DocumentError("m: must be at least 1");
    if (n < 1) throw DocumentError("n: must be at least 1");

    if (!j["epsilon"].is_array()) throw DocumentError("epsilon: expected an array");
    std::vector<Part> parts;
    for (size_t i = 0; i < j["epsilon"].size(); ++i) {
        const auto& pj = j["epsilon"][i];
        std::string where = "epsilon[" + std::to_string(i) + "]";
        if (!pj.is_array()) throw DocumentError(where + ": expected an array");
        Part p;
        for (size_t t = 0; t < pj.size(); ++t)
            p.push_back(static_cast<int>(
                detail::doc_int(pj[t], where + "[" + std::to_string(t) + "]")));
        parts.push_back(std::move(p));
    }

    if (!j["lambda"].is_array()) throw DocumentError("lambda: expected an array");
    if (j["lambda"].size() != static_cast<size_t>(n))
        throw DocumentError("lambda: expected " + std::to_string(n) + " vectors, got " +
                            std::to_string(j["lambda"].size()));
    std::vector<CVector> vecs;
    for (size_t jv = 0; jv < j["lambda"].size(); ++jv) {
        const auto& vj = j["lambda"][jv];
        std::string where = "lambda[" + std::to_string(jv) + "]";
        if (!vj.is_array() || vj.size() != static_cast<size_t>(m))
            throw DocumentError(where + ": expected " + std::to_string(m) +
                                " complex entries");
        CVector v;
        for (size_t c = 0; c < vj.size(); ++c) {
            const auto& zj = vj[c];
            std::string zwhere = where + "[" + std::to_string(c) + "]";
            if (!zj.is_array() || zj.size() != 2)
                throw DocumentError(zwhere + ": expected a [re, im] pair");
            v.push_back({detail::doc_rational(zj[0], zwhere + ".re"),
                         detail::doc_rational(zj[1], zwhere + ".im")});
        }
        vecs.push_back(std::move(v));
    }

    SystemDocument doc;
    try {
        doc.eps = make_fundamental_set(static_cast<size_t>(m), static_cast<size_t>(n),
                                       std::move(parts));
        doc.lam = make_configuration(static_cast<size_t>(m), std::move(vecs));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }

    if (j.contains("basis") && !j["basis"].is_null()) {
        if (!j["basis"].is_array() || j["basis"].size() != static_cast<size_t>(m))
            throw DocumentError("basis: expected " + std::to_string(m) + " vectors");
        std::vector<std::vector<long>> rows;
        for (size_t r = 0; r < j["basis"].size(); ++r) {
            const auto& rj = j["basis"][r];
            std::string where = "basis[" + std::to_string(r) + "]";
            if (!rj.is_array() || rj.size() != static_cast<size_t>(m))
                throw DocumentError(where + ": expected " + std::to_string(m) +
                                    " integers");
            std::vector<long> row;
            for (size_t c = 0; c < rj.size(); ++c)
                row.push_back(detail::doc_int(rj[c], where + "[" + std::to_string(c) + "]"));
            rows.push_back(std::move(row));
        }
        doc.basis = std::move(rows);
    }
    if (j.contains("metadata") && !j["metadata"].is_null()) {
        const auto& mj = j["metadata"];
        if (!mj.is_object()) throw DocumentError("metadata: expected an object");
        if (mj.contains("name")) {
            if (!mj["name"].is_string()) throw DocumentError("metadata.name: expected a string");
            doc.name = mj["name"].get<std::string>();
        }
        if (mj.contains("seed")) {
            if (!mj["seed"].is_number_unsigned() && !mj["seed"].is_number_integer())
                throw DocumentError("metadata.seed: expected an integer");
            doc.seed = mj["seed"].get<std::uint64_t>();
        }
    }
    return doc;
}

inline std::string document_to_json(const SystemDocument& doc) {
    detail::OrderedJson j;
    j["m"] = doc.eps.m;
    j["n"] = doc.eps.n;
    j["epsilon"] = doc.eps.parts;
    detail::OrderedJson lam = detail::OrderedJson::array();
    for (const auto& v : doc.lam.vectors) {
        detail::OrderedJson vj = detail::OrderedJson::array();
        for (const auto& z : v)
            vj.push_back({to_string(z.re), to_string(z.im)});
        lam.push_back(std::move(vj));
    }
    j["lambda"] = std::move(lam);
    if (doc.basis) j["basis"] = *doc.basis;
    if (doc.name || doc.seed) {
        detail::OrderedJson meta = detail::OrderedJson::object();
        if (doc.name) meta["name"] = *doc.name;
        if (doc.seed) meta["seed"] = *doc.seed;
        j["metadata"] = std::move(meta);
    }
    return j.dump(2) + "\n";
}

inline SystemDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return document_from_json(buf.str());
}

inline void save_document(const SystemDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DocumentError("cannot write " + path);
    out << document_to_json(doc);
}

}  // namespace lvmb
