#include "fairdiv/json_io.hpp"

#include <string>
#include <utility>

namespace fairdiv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON document");
    return doc;
}

const json& require_field(const json& doc, const char* name) {
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    auto it = doc.find(name);
    if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int require_positive_int(const json& value, const char* name) {
    if (!value.is_number_integer() && !value.is_number_unsigned())
        throw ParseError(std::string("field \"") + name + "\" must be an integer");
    long long v = value.get<long long>();
    if (v < 1 || v > 1'000'000)
        throw ParseError(std::string("field \"") + name + "\" out of range");
    return static_cast<int>(v);
}

Rational weight_cell(const json& value, int row, int col) {
    std::string where =
        "weight at row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
    Rational w;
    if (value.is_number_unsigned()) {
        w = Rational(static_cast<unsigned long>(value.get<unsigned long long>()));
    } else if (value.is_number_integer()) {
        w = Rational(static_cast<long>(value.get<long long>()));
    } else if (value.is_number_float()) {
        // No silent float-to-rational guessing; exactness is the contract.
        throw ParseError(where + " is a non-integer number; write it as a string \"p/q\"");
    } else if (value.is_string()) {
        try {
            w = parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    } else {
        throw ParseError(where + " must be an integer or a rational string");
    }
    if (w < 0) throw ParseError(where + " is negative");
    return w;
}

}  // namespace

Instance instance_from_json(const json& doc) {
    int n = require_positive_int(require_field(doc, "agents"), "agents");
    int m = require_positive_int(require_field(doc, "objects"), "objects");
    const json& rows = require_field(doc, "weights");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("\"weights\" must be an array of " + std::to_string(n) + " rows");
    std::vector<std::vector<Rational>> weights;
    weights.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw ParseError("weight row " + std::to_string(i + 1) + " must have " +
                             std::to_string(m) + " entries");
        std::vector<Rational> out_row;
        out_row.reserve(static_cast<std::size_t>(m));
        for (int l = 0; l < m; ++l)
            out_row.push_back(weight_cell(row[static_cast<std::size_t>(l)], i, l));
        weights.push_back(std::move(out_row));
    }
    return Instance(n, m, std::move(weights));
}

Instance parse_instance(const std::string& text) {
    return instance_from_json(parse_document(text));
}

ordered_json instance_to_json(const Instance& instance) {
    ordered_json doc;
    doc["agents"] = instance.num_agents();
    doc["objects"] = instance.num_objects();
    ordered_json rows = ordered_json::array();
    for (Agent i = 0; i < instance.num_agents(); ++i) {
        ordered_json row = ordered_json::array();
        for (Object l = 0; l < instance.num_objects(); ++l) {
            const Rational& w = instance.weight(i, l);
            if (w.get_den() == 1 && w.get_num().fits_slong_p())
                row.push_back(w.get_num().get_si());
            else
                row.push_back(to_fraction_string(w));
        }
        rows.push_back(std::move(row));
    }
    doc["weights"] = std::move(rows);
    return doc;
}

namespace {

std::vector<Share> shares_from_json(const json& doc, const Instance& instance) {
    const json& rows = require_field(doc, "shares");
    if (!rows.is_array() || static_cast<int>(rows.size()) != instance.num_agents())
        throw ParseError("\"shares\" must be an array of " +
                         std::to_string(instance.num_agents()) + " shares");
    std::vector<Share> shares;
    shares.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        if (!row.is_array())
            throw ParseError("share " + std::to_string(i + 1) + " must be an array");
        Share share;
        for (const json& entry : row) {
            if (!entry.is_number_integer() && !entry.is_number_unsigned())
                throw ParseError("share " + std::to_string(i + 1) +
                                 " holds a non-integer object index");
            long long l = entry.get<long long>();
            if (l < 1 || l > instance.num_objects())
                throw ParseError("object index " + std::to_string(l) + " in share " +
                                 std::to_string(i + 1) + " out of range");
            share.push_back(static_cast<Object>(l - 1));
        }
        shares.push_back(std::move(share));
    }
    return shares;
}

}  // namespace

Allocation allocation_from_json(const json& doc, const Instance& instance) {
    try {
        return Allocation(instance.num_agents(), instance.num_objects(),
                          shares_from_json(doc, instance));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Allocation parse_allocation(const std::string& text, const Instance& instance) {
    return allocation_from_json(parse_document(text), instance);
}

ordered_json allocation_to_json(const Allocation& allocation) {
    ordered_json shares = ordered_json::array();
    for (const Share& share : allocation.shares()) {
        ordered_json row = ordered_json::array();
        for (Object l : share) row.push_back(l + 1);
        shares.push_back(std::move(row));
    }
    ordered_json doc;
    doc["shares"] = std::move(shares);
    return doc;
}

Sequence sequence_from_json(const json& doc, const Instance& instance) {
    const json& picks = require_field(doc, "picks");
    if (!picks.is_array() || static_cast<int>(picks.size()) != instance.num_objects())
        throw ParseError("\"picks\" must list exactly " +
                         std::to_string(instance.num_objects()) + " picks");
    Sequence sequence;
    sequence.picks.reserve(picks.size());
    for (const json& entry : picks) {
        if (!entry.is_number_integer() && !entry.is_number_unsigned())
            throw ParseError("picks must be agent indices");
        long long a = entry.get<long long>();
        if (a < 1 || a > instance.num_agents())
            throw ParseError("agent index " + std::to_string(a) + " in picks out of range");
        sequence.picks.push_back(static_cast<Agent>(a - 1));
    }
    return sequence;
}

Sequence parse_sequence(const std::string& text, const Instance& instance) {
    return sequence_from_json(parse_document(text), instance);
}

ordered_json sequence_to_json(const Sequence& sequence) {
    ordered_json picks = ordered_json::array();
    for (Agent a : sequence.picks) picks.push_back(a + 1);
    ordered_json doc;
    doc["picks"] = std::move(picks);
    return doc;
}

ordered_json relation_to_json(const GenerationRelation& relation) {
    ordered_json edges = ordered_json::array();
    for (const auto& [sequence, allocation] : relation.edges) {
        ordered_json edge;
        edge["sequence"] = sequence_to_json(sequence)["picks"];
        edge["allocation"] = allocation_to_json(allocation)["shares"];
        edges.push_back(std::move(edge));
    }
    ordered_json doc;
    doc["edges"] = std::move(edges);
    return doc;
}

}  // namespace fairdiv
