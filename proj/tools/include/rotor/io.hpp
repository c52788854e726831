#pragma once

#include <rotor/cocycles.hpp>
#include <rotor/semiconj.hpp>
#include <rotor/sullivan.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace rotor::io {

using json = nlohmann::ordered_json;

// Malformed input; `where` is a JSON-pointer-like location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error("parse-error at " + where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

json to_json(const Rational& r);
json to_json(const CirclePoint& p);
json to_json(const PLLift& f);
json to_json(const CircleHomeo& h);
json to_json(const GroupAction& a);
json to_json(const Word& w);
json to_json(const TranslationNumberResult& t);
json to_json(const HomCochain2& f);
json to_json(const NondegCochain2& f);
json to_json(const CircleSet& s);
json to_json(const StepTable& t);
json to_json(const Arc& a);

Rational rational_from_json(const json& j, const std::string& where);
CirclePoint point_from_json(const json& j, const std::string& where);
// Schema problems raise ParseError; map invariants raise Error(ValidationError).
PLLift lift_from_json(const json& j, const std::string& where);
CircleHomeo homeo_from_json(const json& j, const std::string& where);
GroupAction action_from_json(const json& j, const std::string& where = "");
std::vector<Arc> arcs_from_json(const json& j, const std::string& where);

json read_json_file(const std::string& path);
GroupAction parse_action_file(const std::string& path);
PLLift parse_map_file(const std::string& path);
// Writes through a temporary file and a rename.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace rotor::io
