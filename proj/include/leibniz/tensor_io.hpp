#ifndef LEIBNIZ_TENSOR_IO_HPP
#define LEIBNIZ_TENSOR_IO_HPP

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/extensions.hpp"

namespace leibniz {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace io {

using json = nlohmann::ordered_json;

inline constexpr const char* tensor_format_tag = "leibniz-tensor/1";
inline constexpr const char* matrix_format_tag = "leibniz-matrix/1";
inline constexpr const char* extension_format_tag = "leibniz-ext/1";

/// FNV-1a 64-bit content digest, printed as 16 hex digits.
inline std::string digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

inline json tensor_to_json(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    json file;
    file["format"] = tensor_format_tag;
    file["dim"] = n;
    file["basis"] = L.basis_labels;
    json brackets = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            json result;
            for (std::size_t k = 0; k < n; ++k)
                if (!L.tensor.c(i, j, k).is_zero())
                    result[std::to_string(k)] = L.tensor.c(i, j, k).str();
            if (result.empty()) continue;  // zero brackets are omitted
            json record;
            record["left"] = i;
            record["right"] = j;
            record["result"] = std::move(result);
            brackets.push_back(std::move(record));
        }
    file["brackets"] = std::move(brackets);
    return file;
}

inline std::size_t parse_index(const json& j, std::size_t dim, const char* what) {
    if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
    std::size_t v = j.get<std::size_t>();
    if (v >= dim) throw ParseError(std::string(what) + " out of range");
    return v;
}

inline Rat parse_rat(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a rational string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

inline LeibnizAlgebra tensor_from_json(const json& file) {
    if (!file.is_object() || !file.contains("format") || file["format"] != tensor_format_tag)
        throw ParseError("missing or unknown tensor format tag");
    for (const char* key : {"dim", "basis", "brackets"})
        if (!file.contains(key)) throw ParseError(std::string("tensor file lacks '") + key + "'");
    if (!file["dim"].is_number_unsigned()) throw ParseError("dim must be a non-negative integer");
    const std::size_t n = file["dim"].get<std::size_t>();
    if (!file["basis"].is_array() || file["basis"].size() != n)
        throw ParseError("basis must list exactly dim labels");
    std::vector<std::string> labels;
    for (const auto& l : file["basis"]) {
        if (!l.is_string()) throw ParseError("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    LeibnizAlgebra L(n);
    L.basis_labels = std::move(labels);
    if (!file["brackets"].is_array()) throw ParseError("brackets must be an array");
    std::vector<bool> seen(n * n, false);
    for (const auto& record : file["brackets"]) {
        if (!record.is_object() || !record.contains("left") || !record.contains("right") ||
            !record.contains("result"))
            throw ParseError("bracket records need left, right and result");
        std::size_t i = parse_index(record["left"], n, "left index");
        std::size_t j = parse_index(record["right"], n, "right index");
        if (seen[i * n + j]) throw ParseError("duplicate bracket record");
        seen[i * n + j] = true;
        if (!record["result"].is_object()) throw ParseError("result must map indices to rationals");
        for (const auto& [key, value] : record["result"].items()) {
            std::size_t k;
            try {
                std::size_t pos = 0;
                k = std::stoul(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("result key '" + key + "' is not an index");
            }
            if (k >= n) throw ParseError("result index out of range");
            L.tensor.c(i, j, k) = parse_rat(value, "result coefficient");
        }
    }
    return L;
}

inline json matrix_entries_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat matrix_entries_from_json(const json& rows, const char* what) {
    if (!rows.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
    const std::size_t r = rows.size();
    std::size_t c = r && rows[0].is_array() ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw ParseError(std::string(what) + " has ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_rat(rows[i][j], what);
    }
    return m;
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace detail

/// Canonical serialization: fixed key order, brackets sorted by (left, right),
/// ascending result indices, two-space indentation, trailing newline. Files
/// produced here are fixed points of parse-then-serialize.
inline std::string serialize_tensor_file(const LeibnizAlgebra& L) {
    return detail::tensor_to_json(L).dump(2) + "\n";
}

inline LeibnizAlgebra parse_tensor_file(const std::string& text) {
    return detail::tensor_from_json(detail::parse_text(text));
}

inline std::string serialize_matrix_file(const Mat& m) {
    json file;
    file["format"] = matrix_format_tag;
    file["rows"] = m.rows();
    file["cols"] = m.cols();
    file["entries"] = detail::matrix_entries_to_json(m);
    return file.dump(2) + "\n";
}

inline Mat parse_matrix_file(const std::string& text) {
    json file = detail::parse_text(text);
    if (!file.is_object() || !file.contains("format") || file["format"] != matrix_format_tag)
        throw ParseError("missing or unknown matrix format tag");
    for (const char* key : {"rows", "cols", "entries"})
        if (!file.contains(key)) throw ParseError(std::string("matrix file lacks '") + key + "'");
    Mat m = detail::matrix_entries_from_json(file["entries"], "matrix entries");
    if (!file["rows"].is_number_unsigned() || file["rows"].get<std::size_t>() != m.rows() ||
        !file["cols"].is_number_unsigned() || file["cols"].get<std::size_t>() != m.cols())
        throw ParseError("matrix dimensions disagree with entries");
    return m;
}

/// Extension data: the abelian base dimension, the fiber tensor inline, one
/// l and r matrix per base vector, and the omega table as vectors in the
/// fiber, all in the same rational-string encoding.
inline std::string serialize_extension_file(const ExtensionData& E) {
    E.validate();
    json file;
    file["format"] = extension_format_tag;
    file["base_dim"] = E.base_dim;
    file["fiber"] = detail::tensor_to_json(E.fiber);
    json l = json::array(), r = json::array();
    for (const Mat& m : E.l) l.push_back(detail::matrix_entries_to_json(m));
    for (const Mat& m : E.r) r.push_back(detail::matrix_entries_to_json(m));
    file["l"] = std::move(l);
    file["r"] = std::move(r);
    json omega = json::array();
    for (const auto& row : E.omega) {
        json jrow = json::array();
        for (const Vec& w : row) {
            json jvec = json::array();
            for (const Rat& x : w) jvec.push_back(x.str());
            jrow.push_back(std::move(jvec));
        }
        omega.push_back(std::move(jrow));
    }
    file["omega"] = std::move(omega);
    return file.dump(2) + "\n";
}

inline ExtensionData parse_extension_file(const std::string& text) {
    json file = detail::parse_text(text);
    if (!file.is_object() || !file.contains("format") || file["format"] != extension_format_tag)
        throw ParseError("missing or unknown extension format tag");
    for (const char* key : {"base_dim", "fiber", "l", "r", "omega"})
        if (!file.contains(key)) throw ParseError(std::string("extension file lacks '") + key + "'");
    if (!file["base_dim"].is_number_unsigned()) throw ParseError("base_dim must be an integer");
    ExtensionData E{file["base_dim"].get<std::size_t>(), detail::tensor_from_json(file["fiber"]),
                    {}, {}, {}};
    if (!file["l"].is_array() || !file["r"].is_array()) throw ParseError("l and r must be arrays");
    for (const auto& m : file["l"]) E.l.push_back(detail::matrix_entries_from_json(m, "l map"));
    for (const auto& m : file["r"]) E.r.push_back(detail::matrix_entries_from_json(m, "r map"));
    if (!file["omega"].is_array()) throw ParseError("omega must be an array");
    for (const auto& jrow : file["omega"]) {
        if (!jrow.is_array()) throw ParseError("omega rows must be arrays");
        std::vector<Vec> row;
        for (const auto& jvec : jrow) {
            if (!jvec.is_array()) throw ParseError("omega values must be arrays");
            Vec w;
            for (const auto& x : jvec) w.push_back(detail::parse_rat(x, "omega coefficient"));
            row.push_back(std::move(w));
        }
        E.omega.push_back(std::move(row));
    }
    try {
        E.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return E;
}

}  // namespace io
}  // namespace leibniz

#endif
