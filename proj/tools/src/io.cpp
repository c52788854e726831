#include <rotor/error.hpp>
#include <rotor/io.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rotor::io {

json to_json(const Rational& r) { return to_string(r); }
json to_json(const CirclePoint& p) { return to_string(p.rep()); }

json to_json(const PLLift& f) {
    json j;
    j["kind"] = f.kind() == LiftKind::Strict ? "strict" : "monotone";
    json xs = json::array();
    json left = json::array();
    json point = json::array();
    json right = json::array();
    for (const Node& n : f.nodes()) {
        xs.push_back(to_json(n.x));
        left.push_back(to_json(n.left));
        point.push_back(to_json(n.point));
        right.push_back(to_json(n.right));
    }
    j["breakpoints"] = xs;
    if (f.kind() == LiftKind::Strict) {
        j["point"] = point;
    } else {
        j["left"] = left;
        j["point"] = point;
        j["right"] = right;
    }
    return j;
}

json to_json(const CircleHomeo& h) { return to_json(h.sigma()); }

json to_json(const Word& w) {
    json j = json::array();
    for (int letter : w) j.push_back(letter);
    return j;
}

json to_json(const GroupAction& a) {
    json j;
    json gens = json::array();
    for (const CircleHomeo& g : a.generators()) gens.push_back(to_json(g));
    j["generators"] = gens;
    if (a.has_lifts()) {
        json lifts = json::array();
        for (const PLLift& l : a.lifts()) lifts.push_back(to_json(l));
        j["lifts"] = lifts;
    }
    json rels = json::array();
    for (const Word& w : a.relations()) rels.push_back(to_json(w));
    j["relations"] = rels;
    return j;
}

json to_json(const TranslationNumberResult& t) {
    json j;
    if (t.exact) {
        j["exact"] = to_json(t.value);
        j["witness"] = to_json(t.witness);
    } else {
        j["interval"] = json::array({to_json(t.lo), to_json(t.hi)});
        // Endpoint denominators grow with n; the decimals are for reading only.
        j["approx"] = json::array({t.lo.get_d(), t.hi.get_d()});
        j["n"] = t.iterations;
    }
    return j;
}

json to_json(const HomCochain2& f) {
    return json{{"f0", f.f0}, {"f1", f.f1}, {"f2", f.f2}, {"f3", f.f3}, {"f+", f.fplus}, {"f-", f.fminus}};
}

json to_json(const NondegCochain2& f) {
    json j;
    for (NondegClass c : all_nondeg_classes) j[nondeg_class_name(c)] = f.at(c);
    return j;
}

json to_json(const CircleSet& s) {
    json j = json::array();
    for (const Interval& i : s.parts()) {
        if (i.lo == i.hi) {
            j.push_back(to_json(i.lo));
        } else {
            std::string text = std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) +
                               (i.hi_closed ? "]" : ")");
            j.push_back(text);
        }
    }
    return j;
}

json to_json(const StepTable& t) {
    json j = json::array();
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        j.push_back(json{{"x", to_json(t.x[i])}, {"at", t.at[i]}, {"after", t.after[i]}});
    }
    return j;
}

json to_json(const Arc& a) { return json::array({to_json(a.start), to_json(a.end)}); }

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(where, "expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

CirclePoint point_from_json(const json& j, const std::string& where) {
    return CirclePoint(rational_from_json(j, where));
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<Rational> rational_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return out;
}

Word word_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of integers");
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw ParseError(where + "/" + std::to_string(i), "expected an integer");
        w.push_back(j[i].get<int>());
    }
    return w;
}

}  // namespace

constexpr std::size_t kLargeBreakpointCount = 10000;

PLLift lift_from_json(const json& j, const std::string& where) {
    const json& kind = field(j, "kind", where);
    if (!kind.is_string() || (kind != "strict" && kind != "monotone")) {
        throw ParseError(where + "/kind", "expected \"strict\" or \"monotone\"");
    }
    std::vector<Rational> xs = rational_array(field(j, "breakpoints", where), where + "/breakpoints");
    std::vector<Rational> point = rational_array(field(j, "point", where), where + "/point");
    if (point.size() != xs.size()) throw ParseError(where + "/point", "length differs from breakpoints");
    if (xs.empty()) throw ParseError(where + "/breakpoints", "at least one breakpoint is required");
    if (xs.size() > kLargeBreakpointCount) {
        std::fprintf(stderr, "warning: %s has %zu breakpoints; compositions grow linearly from here\n", where.c_str(),
                     xs.size());
    }
    try {
        if (kind == "strict") {
            std::vector<std::pair<Rational, Rational>> pts;
            for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], point[i]);
            return PLLift::from_points(LiftKind::Strict, pts);
        }
        std::vector<Rational> left = rational_array(field(j, "left", where), where + "/left");
        std::vector<Rational> right = rational_array(field(j, "right", where), where + "/right");
        if (left.size() != xs.size()) throw ParseError(where + "/left", "length differs from breakpoints");
        if (right.size() != xs.size()) throw ParseError(where + "/right", "length differs from breakpoints");
        std::vector<Node> nodes;
        for (std::size_t i = 0; i < xs.size(); ++i) nodes.push_back(Node{xs[i], left[i], point[i], right[i]});
        return PLLift::from_nodes(LiftKind::Monotone, nodes);
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, where + ": " + e.what());
    }
}

CircleHomeo homeo_from_json(const json& j, const std::string& where) {
    PLLift f = lift_from_json(j, where);
    if (f.kind() != LiftKind::Strict) throw Error(ErrorCode::ValidationError, where + ": generator must be strict");
    return CircleHomeo(f);
}

GroupAction action_from_json(const json& j, const std::string& where) {
    const json& gens = field(j, "generators", where);
    if (!gens.is_array() || gens.empty()) throw ParseError(where + "/generators", "expected a non-empty array");
    std::vector<CircleHomeo> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        generators.push_back(homeo_from_json(gens[i], where + "/generators/" + std::to_string(i)));
    }
    std::optional<std::vector<PLLift>> lifts;
    if (j.contains("lifts") && !j["lifts"].is_null()) {
        const json& ls = j["lifts"];
        if (!ls.is_array()) throw ParseError(where + "/lifts", "expected an array");
        std::vector<PLLift> out;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            out.push_back(lift_from_json(ls[i], where + "/lifts/" + std::to_string(i)));
        }
        lifts = std::move(out);
    }
    std::vector<Word> relations;
    if (j.contains("relations")) {
        const json& rs = j["relations"];
        if (!rs.is_array()) throw ParseError(where + "/relations", "expected an array");
        for (std::size_t i = 0; i < rs.size(); ++i) {
            relations.push_back(word_from_json(rs[i], where + "/relations/" + std::to_string(i)));
        }
    }
    try {
        return GroupAction(std::move(generators), std::move(lifts), std::move(relations));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ValidationError) throw;
        throw Error(ErrorCode::ValidationError, e.what());
    }
}

std::vector<Arc> arcs_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of [start, end] pairs");
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) throw ParseError(at, "expected [start, end]");
        arcs.push_back(make_arc(rational_from_json(j[i][0], at + "/0"), rational_from_json(j[i][1], at + "/1")));
    }
    return arcs;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + " byte " + std::to_string(e.byte), e.what());
    }
}

GroupAction parse_action_file(const std::string& path) { return action_from_json(read_json_file(path), path + "#"); }

PLLift parse_map_file(const std::string& path) { return lift_from_json(read_json_file(path), path + "#"); }

void write_text_atomic(const std::string& path, const std::string& text) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("io-error: cannot write " + path);
        out << text;
        if (!out) throw std::runtime_error("io-error: cannot write " + path);
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace rotor::io
