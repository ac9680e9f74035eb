#include "sumset/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace sumset {

using nlohmann::json;

namespace {

json ratio_list(const std::vector<Ratio>& values) {
    json arr = json::array();
    for (const Ratio& v : values) arr.push_back(v.str());
    return arr;
}

std::vector<Ratio> parse_list(const json& arr, const char* field) {
    if (!arr.is_array())
        throw rejected_input(std::string("pair JSON: '") + field + "' must be an array");
    std::vector<Ratio> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_string())
            throw rejected_input(std::string("pair JSON: '") + field +
                                 "' entries must be strings");
        out.push_back(Ratio::parse(v.get<std::string>()));
    }
    return out;
}

} // namespace

json pair_to_json(const SolutionPair& p, bool canonical_flag) {
    json j;
    j["schema"] = kSchemaVersion;
    j["m"] = p.m();
    j["n"] = p.n();
    j["a"] = ratio_list(p.a);
    j["b"] = ratio_list(p.b);
    j["canonical"] = canonical_flag;
    return j;
}

json pair_to_json(const SolutionPair& p) {
    bool canonical = verify_pair(p).ok && canonicalize(p) == p;
    return pair_to_json(p, canonical);
}

SolutionPair pair_from_json(const json& j) {
    if (!j.is_object()) throw rejected_input("pair JSON: not an object");
    if (j.contains("schema") && j["schema"] != kSchemaVersion)
        throw rejected_input("pair JSON: unsupported schema version");
    if (!j.contains("a") || !j.contains("b"))
        throw rejected_input("pair JSON: missing 'a' or 'b'");
    SolutionPair p;
    try {
        p.a = parse_list(j["a"], "a");
        p.b = parse_list(j["b"], "b");
    } catch (const domain_error& e) {
        throw rejected_input(std::string("pair JSON: ") + e.what());
    }
    if (j.contains("m") && j["m"].get<std::size_t>() != p.m())
        throw rejected_input("pair JSON: 'm' does not match length of 'a'");
    if (j.contains("n") && j["n"].get<std::size_t>() != p.n())
        throw rejected_input("pair JSON: 'n' does not match length of 'b'");
    return p;
}

json matrix_to_json(const SquareMatrix3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    json j;
    j["schema"] = kSchemaVersion;
    j["entries"] = rows;
    return j;
}

SquareMatrix3 matrix_from_json(const json& j) {
    const json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("entries")) throw rejected_input("matrix JSON: missing 'entries'");
        rows = &j["entries"];
    }
    if (!rows->is_array() || rows->size() != 3)
        throw rejected_input("matrix JSON: expected 3 rows");
    SquareMatrix3 m;
    for (int i = 0; i < 3; ++i) {
        const json& row = (*rows)[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 3)
            throw rejected_input("matrix JSON: expected 3 columns per row");
        for (int c = 0; c < 3; ++c) {
            const json& v = row[static_cast<std::size_t>(c)];
            if (!v.is_string())
                throw rejected_input("matrix JSON: entries must be strings");
            try {
                m.at(i, c) = Ratio::parse(v.get<std::string>());
            } catch (const domain_error& e) {
                throw rejected_input(std::string("matrix JSON: ") + e.what());
            }
        }
    }
    return m;
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["ok"] = r.ok;
    j["duplicate_a"] = r.duplicate_a;
    j["duplicate_b"] = r.duplicate_b;
    json fails = json::array();
    for (const VerifyFailure& f : r.failures)
        fails.push_back({{"i", f.i}, {"j", f.j}, {"sum", f.sum.str()}});
    j["failures"] = fails;
    return j;
}

json report_to_json(const MatrixReport& r) {
    json j;
    j["semi_magic"] = r.semi_magic;
    j["magic_sum"] = r.magic_sum.str();
    j["all_entries_square"] = r.all_entries_square;
    json cells = json::array();
    for (auto [row, col] : r.failing_cells)
        cells.push_back({{"row", row}, {"col", col}});
    j["failing_cells"] = cells;
    return j;
}

std::string pair_to_text(const SolutionPair& p) {
    auto render = [](const std::vector<Ratio>& values) {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ", ";
            out << values[i].str();
        }
        out << "}";
        return out.str();
    };
    return "A = " + render(p.a) + "\nB = " + render(p.b) + "\n";
}

SolutionPair load_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rejected_input("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw rejected_input("malformed JSON in '" + path + "': " + e.what());
    }
    return pair_from_json(j);
}

void save_json(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

json stream_header(const SearchConfig& cfg) {
    json j;
    j["schema"] = kSchemaVersion;
    j["type"] = "header";
    j["bound"] = cfg.bound_n.get_str();
    j["shape"] = {cfg.m, cfg.n};
    j["max_results"] = cfg.max_results;
    j["threads"] = cfg.thread_count;
    return j;
}

json stream_footer(std::size_t count, double elapsed_seconds) {
    json j;
    j["type"] = "footer";
    j["count"] = count;
    j["elapsed_seconds"] = elapsed_seconds;
    return j;
}

json checkpoint_to_json(const Checkpoint& c) {
    json j;
    j["schema"] = kSchemaVersion;
    j["bound"] = c.bound_n.get_str();
    j["m"] = c.m;
    j["n"] = c.n;
    j["completed_slots"] = c.completed_slots;
    j["emitted"] = c.emitted;
    return j;
}

Checkpoint checkpoint_from_json(const json& j) {
    Checkpoint c;
    try {
        c.bound_n = Integer(j.at("bound").get<std::string>());
        c.m = j.at("m").get<std::size_t>();
        c.n = j.at("n").get<std::size_t>();
        c.completed_slots = j.at("completed_slots").get<std::size_t>();
        c.emitted = j.at("emitted").get<std::size_t>();
    } catch (const json::exception& e) {
        throw rejected_input(std::string("malformed checkpoint: ") + e.what());
    }
    return c;
}

} // namespace sumset
