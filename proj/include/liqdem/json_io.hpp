#pragma once

// JSON schemas for profiles and reports.
//
// Opinion profile:
//   {"n": 3, "issues": ["p","q","r"], "gamma": "(p&q)->r",
//    "opinions": [["1","0","*"], ...]}
// Proxy profile: opinion entries are {"v": 0|1} or {"d": agentId}.
// Default proxy profile: entries are {"v": 0|1, "d": agentId}.
// Dynamics graph:
//   {"n": 2, "issues": ["p"], "trustees": [[1],[0]]}   (trustee per issue)

#include <string>
#include <vector>

#include <json.hpp>

#include "liqdem/bdp.hpp"
#include "liqdem/common.hpp"
#include "liqdem/default_proxy.hpp"
#include "liqdem/opinion.hpp"
#include "liqdem/proxy.hpp"
#include "liqdem/semantics.hpp"

namespace liqdem {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

inline int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer())
        throw InputError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

} // namespace detail

struct ProfileDocument {
    IssueSet issues;
    std::string gamma_text;
    Theory theory;
    OpinionProfile profile;
};

inline IssueSet parse_issue_set(const Json& j, const std::string& where) {
    const Json& arr = detail::field(j, "issues", where);
    if (!arr.is_array() || arr.empty())
        throw InputError(where + ": 'issues' must be a non-empty array of labels");
    std::vector<std::string> labels;
    for (const Json& e : arr) {
        if (!e.is_string()) throw InputError(where + ": issue labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    return IssueSet(std::move(labels));
}

inline std::pair<IssueSet, Theory> parse_structure(const Json& j, const std::string& where) {
    IssueSet issues = parse_issue_set(j, where);
    std::string gamma_text = "T";
    if (j.contains("gamma")) {
        if (!j.at("gamma").is_string()) throw InputError(where + ": 'gamma' must be a string");
        gamma_text = j.at("gamma").get<std::string>();
    }
    Formula gamma = parse_formula(gamma_text, issues);
    // members are fully built before the return list: gcc 11 leaks the
    // earlier members of a returned aggregate if a later initializer throws
    Theory theory(std::move(gamma), issues);
    return {std::move(issues), std::move(theory)};
}

inline ProfileDocument parse_opinion_profile(const Json& j) {
    const std::string where = "opinion profile";
    auto [issues, theory] = parse_structure(j, where);
    int n = detail::int_field(j, "n", where);
    const Json& ops = detail::field(j, "opinions", where);
    if (!ops.is_array() || static_cast<int>(ops.size()) != n)
        throw InputError(where + ": 'opinions' must list exactly n agents");
    std::vector<IncompleteOpinion> parsed;
    for (int i = 0; i < n; ++i) {
        const Json& row = ops.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != issues.size())
            throw InputError(where + ": opinions[" + std::to_string(i) +
                             "] must list one value per issue");
        IncompleteOpinion o(issues.size());
        for (IssueId p = 0; p < issues.size(); ++p) {
            const Json& cell = row.at(p);
            std::string text = cell.is_string() ? cell.get<std::string>() : "";
            if (text != "0" && text != "1" && text != "*")
                throw InputError(where + ": opinions[" + std::to_string(i) + "][" +
                                 std::to_string(p) + "] must be \"0\", \"1\" or \"*\"");
            o.set(p, trival_from_char(text[0]));
        }
        parsed.push_back(o);
    }
    std::string gamma_text = j.contains("gamma") ? j.at("gamma").get<std::string>() : "T";
    OpinionProfile profile(std::move(parsed));
    return {std::move(issues), std::move(gamma_text), std::move(theory), std::move(profile)};
}

struct ProxyDocument {
    IssueSet issues;
    std::string gamma_text;
    Theory theory;
    ProxyProfile profile;
};

inline ProxyDocument parse_proxy_profile(const Json& j) {
    const std::string where = "proxy profile";
    auto [issues, theory] = parse_structure(j, where);
    int n = detail::int_field(j, "n", where);
    const Json& ops = detail::field(j, "opinions", where);
    if (!ops.is_array() || static_cast<int>(ops.size()) != n)
        throw InputError(where + ": 'opinions' must list exactly n agents");
    std::vector<ProxyOpinion> parsed;
    for (int i = 0; i < n; ++i) {
        const Json& row = ops.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != issues.size())
            throw InputError(where + ": opinions[" + std::to_string(i) +
                             "] must list one entry per issue");
        ProxyOpinion o;
        for (IssueId p = 0; p < issues.size(); ++p) {
            const Json& cell = row.at(p);
            std::string loc = where + ": opinions[" + std::to_string(i) + "][" +
                              std::to_string(p) + "]";
            if (!cell.is_object() || (cell.contains("v") == cell.contains("d")))
                throw InputError(loc + " must carry exactly one of 'v' or 'd'");
            if (cell.contains("v")) {
                int v = cell.at("v").get<int>();
                if (v != 0 && v != 1) throw InputError(loc + ": 'v' must be 0 or 1");
                o.push_back(ProxyEntry::value(v == 1));
            } else {
                o.push_back(ProxyEntry::delegate(cell.at("d").get<int>()));
            }
        }
        parsed.push_back(std::move(o));
    }
    std::string gamma_text = j.contains("gamma") ? j.at("gamma").get<std::string>() : "T";
    ProxyProfile profile(std::move(parsed), issues.size());
    return {std::move(issues), std::move(gamma_text), std::move(theory), std::move(profile)};
}

struct DefaultDocument {
    IssueSet issues;
    DefaultProxyProfile profile;
};

inline DefaultDocument parse_default_profile(const Json& j) {
    const std::string where = "default proxy profile";
    IssueSet issues = parse_issue_set(j, where);
    int n = detail::int_field(j, "n", where);
    const Json& ops = detail::field(j, "opinions", where);
    if (!ops.is_array() || static_cast<int>(ops.size()) != n)
        throw InputError(where + ": 'opinions' must list exactly n agents");
    std::vector<std::vector<DefaultEntry>> parsed;
    for (int i = 0; i < n; ++i) {
        const Json& row = ops.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != issues.size())
            throw InputError(where + ": opinions[" + std::to_string(i) +
                             "] must list one entry per issue");
        std::vector<DefaultEntry> o;
        for (IssueId p = 0; p < issues.size(); ++p) {
            const Json& cell = row.at(p);
            std::string loc = where + ": opinions[" + std::to_string(i) + "][" +
                              std::to_string(p) + "]";
            if (!cell.is_object() || !cell.contains("v") || !cell.contains("d"))
                throw InputError(loc + " must carry both 'v' and 'd'");
            int v = cell.at("v").get<int>();
            if (v != 0 && v != 1) throw InputError(loc + ": 'v' must be 0 or 1");
            o.push_back({v == 1, cell.at("d").get<int>()});
        }
        parsed.push_back(std::move(o));
    }
    DefaultProxyProfile profile(std::move(parsed), issues.size());
    return {std::move(issues), std::move(profile)};
}

struct BdpGraphDocument {
    IssueSet issues;
    BdpGraph graph;
};

inline BdpGraphDocument parse_bdp_graph(const Json& j) {
    const std::string where = "dynamics graph";
    IssueSet issues = parse_issue_set(j, where);
    int n = detail::int_field(j, "n", where);
    const Json& tr = detail::field(j, "trustees", where);
    if (!tr.is_array() || static_cast<int>(tr.size()) != n)
        throw InputError(where + ": 'trustees' must list exactly n agents");
    std::vector<std::vector<AgentId>> rows;
    for (int i = 0; i < n; ++i) {
        const Json& row = tr.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != issues.size())
            throw InputError(where + ": trustees[" + std::to_string(i) +
                             "] must list one trustee per issue");
        std::vector<AgentId> r;
        for (const Json& cell : row) {
            if (!cell.is_number_integer())
                throw InputError(where + ": trustee ids must be integers");
            r.push_back(cell.get<int>());
        }
        rows.push_back(std::move(r));
    }
    BdpGraph graph(std::move(rows), issues.size());
    return {std::move(issues), std::move(graph)};
}

// Total binary opinions for the dynamics: same layout as opinion profiles,
// with "*" rejected.
inline std::vector<std::uint32_t> parse_total_opinions(const Json& j, int n, int m) {
    const std::string where = "dynamics opinions";
    const Json& ops = detail::field(j, "opinions", where);
    if (!ops.is_array() || static_cast<int>(ops.size()) != n)
        throw InputError(where + ": 'opinions' must list exactly n agents");
    std::vector<std::uint32_t> out(n, 0);
    for (int i = 0; i < n; ++i) {
        const Json& row = ops.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != m)
            throw InputError(where + ": opinions[" + std::to_string(i) +
                             "] must list one value per issue");
        for (int p = 0; p < m; ++p) {
            std::string cell = row.at(p).is_string() ? row.at(p).get<std::string>() : "";
            if (cell == "1") out[i] |= 1u << p;
            else if (cell != "0")
                throw InputError(where + ": opinions[" + std::to_string(i) + "][" +
                                 std::to_string(p) + "] must be \"0\" or \"1\"");
        }
    }
    return out;
}

inline Json opinion_to_json(const IncompleteOpinion& o) {
    Json row = Json::array();
    for (IssueId p = 0; p < o.m(); ++p) row.push_back(std::string(1, to_char(o.get(p))));
    return row;
}

inline Json profile_to_json(const OpinionProfile& p) {
    Json rows = Json::array();
    for (int i = 0; i < p.n(); ++i) rows.push_back(opinion_to_json(p[i]));
    return rows;
}

} // namespace liqdem
