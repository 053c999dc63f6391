#include "cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace netpriv::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

MatrixXr matrix_from_json(const json& rows, const std::string& name) {
    if (!rows.is_array() || rows.empty()) parse_fail(name + " must be a non-empty array of rows");
    const std::size_t cols = rows.at(0).is_array() ? rows.at(0).size() : 0;
    if (cols == 0) parse_fail(name + " row 1 must be a non-empty array");
    MatrixXr m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != cols)
            parse_fail(name + " row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                       std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            if (!row[j].is_number())
                parse_fail(name + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") is not a number");
            const double v = row[j].get<double>();
            if (!std::isfinite(v))
                parse_fail(name + " entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is not finite");
            m(static_cast<Index>(i), static_cast<Index>(j)) = v;
        }
    }
    return m;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(what + ": " + e.what());
    }
}

Index parse_index(std::string_view token, const std::string& where) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 1)
        parse_fail(where + ": expected a positive integer index, got '" + std::string(token) + "'");
    return v;
}

double parse_weight(const std::string& token, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        parse_fail(where + ": expected a number, got '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(v))
        parse_fail(where + ": expected a finite number, got '" + token + "'");
    return v;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParsedSystem parse_matrix_json(const std::string& text) {
    const json doc = parse_json(text, "system JSON");
    if (!doc.is_object() || !doc.contains("A")) parse_fail("system JSON needs an \"A\" field");
    ParsedSystem out;
    out.a = matrix_from_json(doc["A"], "A");
    if (out.a.rows() != out.a.cols())
        throw Error(ErrorCode::NonSquare, "A is " + std::to_string(out.a.rows()) + "x" +
                                              std::to_string(out.a.cols()));
    if (doc.contains("labels")) {
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) parse_fail("labels must be strings");
            out.labels.push_back(l.get<std::string>());
        }
        if (static_cast<Index>(out.labels.size()) != out.a.rows())
            parse_fail("labels has " + std::to_string(out.labels.size()) + " entries, expected " +
                       std::to_string(out.a.rows()));
    }
    return out;
}

ParsedSystem parse_edge_list(const std::string& text) {
    struct Entry {
        Index row, col;
        double value;
    };
    std::vector<Entry> entries;
    Index n = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tok[0] == "nodes") {
            if (tok.size() != 2) parse_fail(where + ": expected 'nodes N'");
            n = std::max(n, parse_index(tok[1], where));
        } else if (tok[0] == "selfdamp") {
            if (tok.size() != 3) parse_fail(where + ": expected 'selfdamp i w'");
            const Index i = parse_index(tok[1], where);
            entries.push_back({i - 1, i - 1, parse_weight(tok[2], where)});
            n = std::max(n, i);
        } else {
            if (tok.size() != 3) parse_fail(where + ": expected 'i j a_ji', got " +
                                            std::to_string(tok.size()) + " fields");
            const Index i = parse_index(tok[0], where);
            const Index j = parse_index(tok[1], where);
            entries.push_back({j - 1, i - 1, parse_weight(tok[2], where)});
            n = std::max({n, i, j});
        }
    }
    if (n == 0) parse_fail("edge list defines no nodes");
    ParsedSystem out;
    out.a = MatrixXr::Zero(n, n);
    for (const auto& e : entries) out.a(e.row, e.col) = e.value;
    return out;
}

ParsedSystem parse_system(const std::filesystem::path& path, SystemFormat format) {
    const std::string text = read_file(path);
    if (format == SystemFormat::Auto)
        format = path.extension() == ".json" ? SystemFormat::Matrix : SystemFormat::EdgeList;
    return format == SystemFormat::Matrix ? parse_matrix_json(text) : parse_edge_list(text);
}

IndexSet parse_index_list(const std::string& text, Index n) {
    std::vector<Index> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) parse_fail("empty entry in index list '" + text + "'");
        const Index v = parse_index(std::string_view(tok).substr(b, e - b + 1), "index list");
        if (v > n)
            throw Error(ErrorCode::IndexOutOfRange,
                        "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return normalized_set(std::move(out), n);
}

MatrixXr build_privacy(const std::string& preset, Index n) {
    if (preset == "full") return MatrixXr::Identity(n, n);
    if (preset == "average") return MatrixXr::Constant(1, n, 1.0 / static_cast<double>(n));

    const auto eq = preset.find('=');
    if (eq == std::string::npos) parse_fail("unknown privacy preset '" + preset + "'");
    const std::string key = preset.substr(0, eq);
    std::string value = preset.substr(eq + 1);

    if (key == "targets") {
        const IndexSet targets = parse_index_list(value, n);
        MatrixXr f = MatrixXr::Zero(static_cast<Index>(targets.size()), n);
        for (Index i = 0; i < f.rows(); ++i) f(i, targets[static_cast<std::size_t>(i)]) = 1.0;
        return f;
    }
    if (key == "clusters") {
        if (!value.empty() && value.front() == '[') value.erase(0, 1);
        if (!value.empty() && value.back() == ']') value.pop_back();
        std::vector<IndexSet> clusters;
        std::stringstream ss(value);
        for (std::string part; std::getline(ss, part, ';');) {
            if (part.find_first_not_of(" \t") == std::string::npos)
                throw Error(ErrorCode::EmptyCluster, "empty cluster in '" + preset + "'");
            clusters.push_back(parse_index_list(part, n));
        }
        if (clusters.empty()) throw Error(ErrorCode::EmptyCluster, "no clusters given");
        MatrixXr f = MatrixXr::Zero(static_cast<Index>(clusters.size()), n);
        for (std::size_t c = 0; c < clusters.size(); ++c)
            for (Index j : clusters[c])
                f(static_cast<Index>(c), j) = 1.0 / static_cast<double>(clusters[c].size());
        return f;
    }
    if (key == "file") {
        const json doc = parse_json(read_file(value), "privacy JSON");
        if (!doc.is_object() || !doc.contains("F")) parse_fail("privacy JSON needs an \"F\" field");
        MatrixXr f = matrix_from_json(doc["F"], "F");
        if (f.cols() != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "F has " + std::to_string(f.cols()) + " columns, expected " + std::to_string(n));
        return f;
    }
    parse_fail("unknown privacy preset '" + key + "'");
}

MatrixXr parse_output_matrix(const std::filesystem::path& path) {
    const json doc = parse_json(read_file(path), "output-matrix JSON");
    if (!doc.is_object() || !doc.contains("C")) parse_fail("output-matrix JSON needs a \"C\" field");
    return matrix_from_json(doc["C"], "C");
}

RationalMatrix parse_w(const std::filesystem::path& path) {
    const json doc = parse_json(read_file(path), "W JSON");
    if (!doc.is_object() || !doc.contains("W")) parse_fail("W JSON needs a \"W\" field");
    const json& rows = doc["W"];
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
        parse_fail("W must be a non-empty array of rows");
    std::vector<std::vector<long long>> values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != rows[0].size())
            parse_fail("W row " + std::to_string(i + 1) + " has the wrong length");
        std::vector<long long> row;
        for (const auto& v : rows[i]) {
            if (!v.is_number_integer()) parse_fail("W entries must be integers");
            row.push_back(v.get<long long>());
        }
        values.push_back(std::move(row));
    }
    return rational_from_rows(values);
}

}  // namespace netpriv::cli
