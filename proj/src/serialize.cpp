#include "skewpp/serialize.hpp"

#include <charconv>

#include "skewpp/errors.hpp"

namespace skewpp {

namespace {

long long parse_count(const nlohmann::ordered_json& node) {
    if (!node.is_string()) throw InputError("count must be a decimal string");
    const std::string& text = node.get_ref<const std::string&>();
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || text.empty() || ptr != text.data() + text.size() || value < 0)
        throw InputError("bad count '" + text + "'");
    return value;
}

int parse_int(const nlohmann::ordered_json& node, const char* what) {
    if (!node.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return node.get<int>();
}

} // namespace

nlohmann::ordered_json to_json(const CountTable& table) {
    nlohmann::ordered_json doc;
    doc["n"] = table.n;
    doc["k"] = table.k;
    doc["side"] = to_string(table.side);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, count] : table.entries) {
        nlohmann::ordered_json entry;
        entry["j"] = key.first;
        entry["l"] = key.second;
        entry["count"] = std::to_string(count);
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

CountTable table_from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") || !doc.contains("side") ||
        !doc.contains("entries") || !doc.at("entries").is_array())
        throw InputError("malformed count table document");
    CountTable table;
    table.n = parse_int(doc.at("n"), "n");
    table.k = parse_int(doc.at("k"), "k");
    if (!doc.at("side").is_string()) throw InputError("side must be a string");
    table.side = parse_side(doc.at("side").get_ref<const std::string&>());
    for (const nlohmann::ordered_json& entry : doc.at("entries")) {
        if (!entry.is_object() || !entry.contains("j") || !entry.contains("l") ||
            !entry.contains("count"))
            throw InputError("malformed count table entry");
        const int j = parse_int(entry.at("j"), "j");
        const int l = parse_int(entry.at("l"), "l");
        if (table.entries.count({j, l})) throw InputError("duplicate count table entry");
        table.add(j, l, parse_count(entry.at("count")));
    }
    return table;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["side"] = to_string(report.side);
    doc["variant"] = to_string(report.variant);
    doc["max_n"] = report.max_n;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const VerifyRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["m"] = row.m;
        r["lhs"] = std::to_string(row.lhs);
        r["rhs"] = std::to_string(row.rhs);
        r["match"] = row.match;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["mismatch_count"] = report.mismatch_count;
    return doc;
}

nlohmann::ordered_json to_json(const Lemma1Report& report) {
    nlohmann::ordered_json doc;
    doc["max"] = report.max;
    doc["checked"] = report.checked;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Lemma1Row& row : report.mismatches) {
        nlohmann::ordered_json r;
        r["d"] = row.d;
        r["r"] = row.r;
        r["lhs"] = std::to_string(row.lhs);
        r["expected"] = std::to_string(row.expected);
        rows.push_back(std::move(r));
    }
    doc["mismatches"] = std::move(rows);
    doc["mismatch_count"] = report.mismatches.size();
    return doc;
}

nlohmann::ordered_json to_json(const ModelsReport& report) {
    nlohmann::ordered_json doc;
    doc["max_n"] = report.max_n;
    doc["fillings_checked"] = report.fillings_checked;
    doc["square_free_checked"] = report.square_free_checked;
    doc["blocked_checked"] = report.blocked_checked;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ModelsMismatch& row : report.mismatches) {
        nlohmann::ordered_json r;
        r["shape"] = row.shape;
        r["filling"] = row.filling;
        r["detail"] = row.detail;
        rows.push_back(std::move(r));
    }
    doc["mismatches"] = std::move(rows);
    doc["mismatch_count"] = report.mismatches.size();
    return doc;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const CountTable& table) {
    std::string out = "n,k,side,j,l,count\n";
    for (const auto& [key, count] : table.entries) {
        out += std::to_string(table.n) + ',' + std::to_string(table.k) + ',';
        out += std::string(to_string(table.side)) + ',';
        out += std::to_string(key.first) + ',' + std::to_string(key.second) + ',';
        out += std::to_string(count) + '\n';
    }
    return out;
}

std::string to_csv(const VerifyReport& report) {
    std::string out = "n,k,m,lhs,rhs,match\n";
    for (const VerifyRow& row : report.rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.k) + ',' +
               std::to_string(row.m) + ',';
        out += std::to_string(row.lhs) + ',' + std::to_string(row.rhs) + ',';
        out += row.match ? "true\n" : "false\n";
    }
    return out;
}

} // namespace skewpp
