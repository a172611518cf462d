#include "dyncycle/cli/workload_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace dyncycle::cli {

using nlohmann::json;

namespace {

VertexId vertex(const json& j, std::size_t n, std::size_t line) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || static_cast<std::size_t>(j.get<std::int64_t>()) >= n) {
        throw InputError(line, "invalid vertex " + j.dump());
    }
    return static_cast<VertexId>(j.get<std::int64_t>());
}

Weight weight(const json& j, std::size_t line) {
    if (!j.is_number() || !std::isfinite(j.get<double>())) {
        throw InputError(line, "invalid weight " + j.dump());
    }
    return j.get<double>();
}

const json& field(const json& obj, const char* name, std::size_t line) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw InputError(line, std::string("missing field \"") + name + "\"");
    }
    return *it;
}

EdgeBatch batch(const json& list, VertexId v, bool incoming, std::size_t n, std::size_t line) {
    if (!list.is_array()) {
        throw InputError(line, "edge list must be an array");
    }
    EdgeBatch out;
    for (const json& item : list) {
        if (!item.is_array() || item.size() != 2) {
            throw InputError(line, "edge entry must be [vertex, weight]");
        }
        const VertexId other = vertex(item[0], n, line);
        const Weight w = weight(item[1], line);
        out.push_back(incoming ? Edge{other, v, w} : Edge{v, other, w});
    }
    return out;
}

json number(Weight w) {
    if (w == std::trunc(w) && std::abs(w) < 9.0e15) {
        return static_cast<std::int64_t>(w);
    }
    return w;
}

} // namespace

Workload read_workload(std::istream& in) {
    Workload wl;
    std::string text;
    std::size_t line = 0;
    bool header = false;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json obj;
        try {
            obj = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError(line, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object()) {
            throw InputError(line, "expected a JSON object");
        }
        if (!header) {
            const json& n = field(obj, "n", line);
            if (!n.is_number_integer() || n.get<std::int64_t>() < 1) {
                throw InputError(line, "n must be a positive integer");
            }
            wl.n = static_cast<std::size_t>(n.get<std::int64_t>());
            if (auto it = obj.find("weights"); it != obj.end()) {
                if (*it == "nonneg") {
                    wl.regime = WeightRegime::Nonneg;
                } else if (*it == "signed") {
                    wl.regime = WeightRegime::Signed;
                } else {
                    throw InputError(line, "weights must be \"nonneg\" or \"signed\"");
                }
            }
            if (auto it = obj.find("W"); it != obj.end()) {
                if (!it->is_number_integer() || it->get<std::int64_t>() < 1) {
                    throw InputError(line, "W must be a positive integer");
                }
                wl.W = it->get<std::int64_t>();
            }
            if (auto it = obj.find("seed"); it != obj.end() && it->is_number_unsigned()) {
                wl.seed = it->get<std::uint64_t>();
            }
            header = true;
            continue;
        }
        const json& kind = field(obj, "op", line);
        Op op;
        op.line = line;
        if (kind == "vertex_update") {
            op.kind = OpKind::VertexUpdate;
            op.v = vertex(field(obj, "v", line), wl.n, line);
            op.in = obj.contains("in") ? batch(obj["in"], op.v, true, wl.n, line) : EdgeBatch{};
            op.out = obj.contains("out") ? batch(obj["out"], op.v, false, wl.n, line) : EdgeBatch{};
        } else if (kind == "insert_edge") {
            op.kind = OpKind::InsertEdge;
            op.u = vertex(field(obj, "u", line), wl.n, line);
            op.v = vertex(field(obj, "v", line), wl.n, line);
            op.w = weight(field(obj, "w", line), line);
        } else if (kind == "delete_edge") {
            op.kind = OpKind::DeleteEdge;
            op.u = vertex(field(obj, "u", line), wl.n, line);
            op.v = vertex(field(obj, "v", line), wl.n, line);
        } else if (kind == "query") {
            op.kind = OpKind::Query;
        } else {
            throw InputError(line, "unknown op " + kind.dump());
        }
        wl.ops.push_back(std::move(op));
    }
    if (!header) {
        throw InputError(line + 1, "missing header line");
    }
    return wl;
}

void write_workload(std::ostream& out, const Workload& wl) {
    out << json{{"n", wl.n}, {"weights", to_string(wl.regime)}, {"W", wl.W}, {"seed", wl.seed}}.dump() << '\n';
    for (const Op& op : wl.ops) {
        json obj;
        obj["op"] = to_string(op.kind);
        switch (op.kind) {
        case OpKind::VertexUpdate: {
            json in = json::array();
            for (const Edge& e : op.in) {
                in.push_back(json::array({e.from, number(e.weight)}));
            }
            json outs = json::array();
            for (const Edge& e : op.out) {
                outs.push_back(json::array({e.to, number(e.weight)}));
            }
            obj["v"] = op.v;
            obj["in"] = std::move(in);
            obj["out"] = std::move(outs);
            break;
        }
        case OpKind::InsertEdge:
            obj["u"] = op.u;
            obj["v"] = op.v;
            obj["w"] = number(op.w);
            break;
        case OpKind::DeleteEdge:
            obj["u"] = op.u;
            obj["v"] = op.v;
            break;
        case OpKind::Query:
            break;
        }
        out << obj.dump() << '\n';
    }
}

std::vector<std::pair<VertexId, VertexId>> read_pairs(std::istream& in, std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') {
            continue;
        }
        std::istringstream ss(text);
        long long s = -1;
        long long t = -1;
        std::string rest;
        if (!(ss >> s >> t) || (ss >> rest) || s < 0 || t < 0 || static_cast<std::size_t>(s) >= n ||
            static_cast<std::size_t>(t) >= n) {
            throw InputError(line, "expected \"s t\" with vertices below " + std::to_string(n));
        }
        pairs.emplace_back(static_cast<VertexId>(s), static_cast<VertexId>(t));
    }
    return pairs;
}

void write_results(std::ostream& out, const std::vector<std::string>& answers) {
    out << "query_index,answer\n";
    for (std::size_t i = 0; i < answers.size(); ++i) {
        out << i << ',' << answers[i] << '\n';
    }
}

std::vector<std::string> read_results(std::istream& in) {
    std::vector<std::string> answers;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        if (line == 1) {
            if (text != "query_index,answer") {
                throw InputError(line, "expected header query_index,answer");
            }
            continue;
        }
        if (text.empty()) {
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string::npos || text.substr(0, comma) != std::to_string(answers.size())) {
            throw InputError(line, "expected query index " + std::to_string(answers.size()));
        }
        answers.push_back(text.substr(comma + 1));
    }
    if (line == 0) {
        throw InputError(1, "empty results file");
    }
    return answers;
}

} // namespace dyncycle::cli
