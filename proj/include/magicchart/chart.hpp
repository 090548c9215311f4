#pragma once

// Text renderers for the expanded magic chart and the Barton-Sudbery table.
// Every renderer is byte-stable: fixed ordering, fixed formatting, no locale
// dependence, so the outputs can be checked in as golden files.

#include <sstream>
#include <string>

#include <json.hpp>

#include "magicchart/intermediate.hpp"

namespace magicchart {

namespace detail {

inline std::string rat_label(const Rat& r) { return r.str(); }

inline std::string cell(const std::string& name, const Int& dim) {
    return name + " (" + dim.str() + ")";
}

}  // namespace detail

inline std::string chart_markdown(const MagicChart& ch) {
    std::ostringstream os;
    os << "# Expanded magic chart\n\n";
    os << "| b \\ a |";
    for (const auto& a : ch.col_params) os << " " << detail::rat_label(a) << " |";
    os << "\n|---|";
    for (std::size_t c = 0; c < ch.col_params.size(); ++c) os << "---|";
    os << "\n";
    for (std::size_t r = 0; r < ch.row_params.size(); ++r) {
        os << "| " << detail::rat_label(ch.row_params[r]) << " |";
        for (std::size_t c = 0; c < ch.col_params.size(); ++c)
            os << " " << detail::cell(ch.names[r][c], ch.dims[r][c]) << " |";
        os << "\n";
    }
    os << "\n# Barton-Sudbery table\n\n";
    os << "| a | der | half-tri | tri |\n|---|---|---|---|\n";
    for (std::size_t r = 0; r < ch.bs_params.size(); ++r) {
        os << "| " << detail::rat_label(ch.bs_params[r]) << " |";
        for (std::size_t c = 0; c < 3; ++c)
            os << " " << detail::cell(ch.bs_names[r][c], ch.bs_dims[r][c]) << " |";
        os << "\n";
    }
    return os.str();
}

inline std::string chart_csv(const MagicChart& ch) {
    std::ostringstream os;
    os << "b\\a";
    for (const auto& a : ch.col_params) os << "," << detail::rat_label(a);
    os << "\n";
    for (std::size_t r = 0; r < ch.row_params.size(); ++r) {
        os << detail::rat_label(ch.row_params[r]);
        for (std::size_t c = 0; c < ch.col_params.size(); ++c)
            os << "," << detail::cell(ch.names[r][c], ch.dims[r][c]);
        os << "\n";
    }
    os << "\n";
    os << "a,der,half-tri,tri\n";
    for (std::size_t r = 0; r < ch.bs_params.size(); ++r) {
        os << detail::rat_label(ch.bs_params[r]);
        for (std::size_t c = 0; c < 3; ++c)
            os << "," << detail::cell(ch.bs_names[r][c], ch.bs_dims[r][c]);
        os << "\n";
    }
    return os.str();
}

inline std::string chart_json(const MagicChart& ch) {
    nlohmann::ordered_json j;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& a : ch.col_params) j["columns"].push_back(detail::rat_label(a));
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < ch.row_params.size(); ++r) {
        nlohmann::ordered_json row;
        row["b"] = detail::rat_label(ch.row_params[r]);
        row["entries"] = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < ch.col_params.size(); ++c) {
            nlohmann::ordered_json e;
            e["name"] = ch.names[r][c];
            e["dim"] = static_cast<long long>(ch.dims[r][c]);
            row["entries"].push_back(e);
        }
        j["rows"].push_back(row);
    }
    j["barton_sudbery"] = nlohmann::ordered_json::array();
    static const char* kBsCols[3] = {"der", "half-tri", "tri"};
    for (std::size_t r = 0; r < ch.bs_params.size(); ++r) {
        nlohmann::ordered_json row;
        row["a"] = detail::rat_label(ch.bs_params[r]);
        row["entries"] = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < 3; ++c) {
            nlohmann::ordered_json e;
            e["column"] = kBsCols[c];
            e["name"] = ch.bs_names[r][c];
            e["dim"] = static_cast<long long>(ch.bs_dims[r][c]);
            row["entries"].push_back(e);
        }
        j["barton_sudbery"].push_back(row);
    }
    return j.dump() + "\n";
}

inline std::string render_chart(const MagicChart& ch, const std::string& format) {
    if (format == "md") return chart_markdown(ch);
    if (format == "csv") return chart_csv(ch);
    if (format == "json") return chart_json(ch);
    throw std::invalid_argument("unknown chart format: " + format);
}

}  // namespace magicchart
