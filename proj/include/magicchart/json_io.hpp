#pragma once

// JSON serialization for the Jordan-algebra demo types. Rationals are encoded
// as strings ("p/q" or "p") so round-trips are exact; octonions are encoded as
// their 8 coordinates in the basis E11, E12, E21, E22, e1, e2, e1*, e2*.

#include <string>

#include <json.hpp>

#include "magicchart/jordan.hpp"

namespace magicchart {

using Json = nlohmann::ordered_json;

inline Json rat_to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const Json& j) { return parse_rat(j.get<std::string>()); }

inline Json octo_to_json(const Octonion& x) {
    Json arr = Json::array();
    for (const auto& c : octo_coords(x)) arr.push_back(rat_to_json(c));
    return arr;
}

inline Octonion octo_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8)
        throw std::invalid_argument("octonion JSON must be an array of 8 rationals");
    std::array<Rat, 8> c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = rat_from_json(j[i]);
    return octo_from_coords(c);
}

inline std::string tag_to_string(AlgTag t) {
    switch (t) {
        case AlgTag::H: return "H";
        case AlgTag::S: return "S";
        case AlgTag::O: return "O";
    }
    throw std::logic_error("bad AlgTag");
}

inline AlgTag tag_from_string(const std::string& s) {
    if (s == "H") return AlgTag::H;
    if (s == "S") return AlgTag::S;
    if (s == "O") return AlgTag::O;
    throw std::invalid_argument("unknown algebra tag: " + s);
}

inline Json j3_to_json(const J3& x) {
    Json j;
    j["tag"] = tag_to_string(x.tag);
    j["diag"] = Json::array({rat_to_json(x.r[0]), rat_to_json(x.r[1]), rat_to_json(x.r[2])});
    j["off"] = Json{{"a", octo_to_json(x.a)}, {"b", octo_to_json(x.b)}, {"c", octo_to_json(x.c)}};
    return j;
}

inline J3 j3_from_json(const Json& j) {
    AlgTag tag = tag_from_string(j.at("tag").get<std::string>());
    const Json& d = j.at("diag");
    if (!d.is_array() || d.size() != 3)
        throw std::invalid_argument("J3 diag must be an array of 3 rationals");
    const Json& off = j.at("off");
    return J3(tag, rat_from_json(d[0]), rat_from_json(d[1]), rat_from_json(d[2]),
              octo_from_json(off.at("a")), octo_from_json(off.at("b")),
              octo_from_json(off.at("c")));
}

inline Json z2_to_json(const Z2& m) {
    Json j;
    j["s"] = rat_to_json(m.s);
    j["x"] = j3_to_json(m.x);
    j["y"] = j3_to_json(m.y);
    j["t"] = rat_to_json(m.t);
    return j;
}

inline Z2 z2_from_json(const Json& j) {
    return {rat_from_json(j.at("s")), j3_from_json(j.at("x")), j3_from_json(j.at("y")),
            rat_from_json(j.at("t"))};
}

inline Json lambda_to_json(const LambdaRep& p) {
    Json j;
    j["omega"] = Json::array();
    for (const auto& v : p.omega) j["omega"].push_back(rat_to_json(v));
    j["h"] = Json::array();
    for (const auto& v : p.h) j["h"].push_back(rat_to_json(v));
    return j;
}

inline LambdaRep lambda_from_json(const Json& j) {
    const Json& om = j.at("omega");
    const Json& h = j.at("h");
    if (!om.is_array() || om.size() != 15 || !h.is_array() || h.size() != 6)
        throw std::invalid_argument("LambdaRep JSON needs 15 omega and 6 h rationals");
    LambdaRep p;
    for (std::size_t i = 0; i < 15; ++i) p.omega[i] = rat_from_json(om[i]);
    for (std::size_t i = 0; i < 6; ++i) p.h[i] = rat_from_json(h[i]);
    return p;
}

}  // namespace magicchart
