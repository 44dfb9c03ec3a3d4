#pragma once

// Catalog layer: ingest Fano records from CSV/JSON, compute the double-cover
// invariants, emit the Calabi-Yau table, deduplicate by topological triple,
// match external candidate triples, and produce scatter-plot data.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycover/invariants.hpp"
#include "cycover/types.hpp"

namespace cycover {

enum class TableFormat { CSV, JSON, ALIGNED_TEXT };

struct TopologicalTriple {
    std::int64_t H3 = 0;
    std::int64_t c2H = 0;
    std::int64_t e = 0;

    friend bool operator==(const TopologicalTriple&, const TopologicalTriple&) = default;
    friend auto operator<=>(const TopologicalTriple&, const TopologicalTriple&) = default;

    std::string str() const {
        return "(" + std::to_string(H3) + "," + std::to_string(c2H) + "," +
               std::to_string(e) + ")";
    }
};

struct CatalogEntry {
    std::int64_t cy_number = 0;
    FanoRecord record;
    CYInvariants invariants;
    bool l2_warning = false;

    TopologicalTriple triple() const {
        return {invariants.H3, invariants.c2H, invariants.e};
    }
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

namespace csv {

// One CSV record; handles quoted fields with embedded commas and "" escapes.
inline std::vector<std::string> split_line(const std::string& line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF input
        } else {
            cur += c;
        }
    }
    if (in_quotes)
        throw ParseError(lineno, "unterminated quote");
    fields.push_back(cur);
    return fields;
}

inline std::string quote_if_needed(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    return out + "\"";
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace csv

namespace detail {

inline std::int64_t parse_int(const std::string& s, std::size_t lineno,
                              const std::string& what) {
    try {
        std::size_t pos = 0;
        std::string t = csv::trim(s);
        std::int64_t v = std::stoll(t, &pos);
        if (pos != t.size())
            throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad " + what + " value '" + s + "'");
    }
}

// Split "1.2, 1.3" into individual fano ids.
inline std::vector<std::string> split_ids(const std::string& field) {
    std::vector<std::string> ids;
    std::string cur;
    std::istringstream ss(field);
    while (std::getline(ss, cur, ','))
        if (std::string t = csv::trim(cur); !t.empty())
            ids.push_back(t);
    return ids;
}

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += ids[i];
    }
    return out;
}

inline CatalogEntry make_entry(std::int64_t cy_number, FanoRecord rec) {
    ComputedInvariants ci = compute_all(rec);
    return CatalogEntry{cy_number, std::move(rec), ci.values, ci.l2_warning};
}

} // namespace detail

inline std::vector<CatalogEntry> load_fano_table_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line))
        return {};
    ++lineno;
    auto header = csv::split_line(line, lineno);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col[csv::trim(header[i])] = i;

    auto find_col = [&](std::initializer_list<const char*> names,
                        bool required) -> std::optional<std::size_t> {
        for (const char* n : names)
            if (auto it = col.find(n); it != col.end())
                return it->second;
        if (required)
            throw ParseError(1, std::string("missing column '") + *names.begin() + "'");
        return std::nullopt;
    };

    std::size_t c_id = *find_col({"fano_id", "fano_ids"}, true);
    std::size_t c_k3 = *find_col({"minus_K3"}, true);
    std::size_t c_n = *find_col({"N"}, true);
    std::size_t c_ey = *find_col({"e_Y"}, true);
    auto c_h2 = find_col({"h2_Y"}, false);
    auto c_k = find_col({"k"}, false);

    std::vector<CatalogEntry> entries;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::trim(line).empty())
            continue;
        auto fields = csv::split_line(line, lineno);
        auto get = [&](std::size_t i) -> const std::string& {
            if (i >= fields.size())
                throw ParseError(lineno, "too few fields");
            return fields[i];
        };
        try {
            std::vector<std::string> ids = detail::split_ids(get(c_id));
            Rational mk3 = parse_rational(get(c_k3));
            std::int64_t N = detail::parse_int(get(c_n), lineno, "N");
            std::int64_t eY = detail::parse_int(get(c_ey), lineno, "e_Y");
            std::int64_t h2 = c_h2 && *c_h2 < fields.size() && !csv::trim(fields[*c_h2]).empty()
                                  ? detail::parse_int(fields[*c_h2], lineno, "h2_Y")
                                  : 1;
            std::int64_t k = c_k && *c_k < fields.size() && !csv::trim(fields[*c_k]).empty()
                                 ? detail::parse_int(fields[*c_k], lineno, "k")
                                 : 1;
            FanoRecord rec(std::move(ids), std::move(mk3), N, eY, h2, k);
            entries.push_back(
                detail::make_entry(static_cast<std::int64_t>(entries.size()) + 1,
                                   std::move(rec)));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
    }
    return entries;
}

inline std::vector<CatalogEntry> load_fano_table_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& ex) {
        throw ParseError(0, std::string("bad JSON: ") + ex.what());
    }
    if (!doc.is_array())
        throw ParseError(0, "expected a JSON array of records");
    std::vector<CatalogEntry> entries;
    for (const auto& item : doc) {
        try {
            std::vector<std::string> ids;
            const auto& idval = item.at("fano_ids");
            if (idval.is_string())
                ids = detail::split_ids(idval.get<std::string>());
            else
                for (const auto& s : idval)
                    ids.push_back(s.get<std::string>());
            const auto& mk = item.at("minus_K3");
            Rational mk3 = mk.is_string() ? parse_rational(mk.get<std::string>())
                                          : Rational(mk.get<std::int64_t>());
            FanoRecord rec(std::move(ids), std::move(mk3),
                           item.at("N").get<std::int64_t>(),
                           item.at("e_Y").get<std::int64_t>(),
                           item.value("h2_Y", std::int64_t{1}),
                           item.value("k", std::int64_t{1}));
            entries.push_back(
                detail::make_entry(static_cast<std::int64_t>(entries.size()) + 1,
                                   std::move(rec)));
        } catch (const std::exception& ex) {
            throw ParseError(entries.size() + 1, ex.what());
        }
    }
    return entries;
}

inline std::vector<CatalogEntry> load_fano_table(std::istream& in, TableFormat fmt) {
    switch (fmt) {
    case TableFormat::CSV: return load_fano_table_csv(in);
    case TableFormat::JSON: return load_fano_table_json(in);
    default: throw std::invalid_argument("load_fano_table: unsupported format");
    }
}

struct TripleClass {
    TopologicalTriple triple;
    std::vector<std::int64_t> cy_numbers;
};

inline std::vector<TripleClass> dedup_triples(const std::vector<CatalogEntry>& entries) {
    std::map<TopologicalTriple, std::vector<std::int64_t>> classes;
    for (const auto& e : entries)
        classes[e.triple()].push_back(e.cy_number);
    std::vector<TripleClass> out;
    for (auto& [t, ids] : classes) {
        std::sort(ids.begin(), ids.end());
        out.push_back({t, std::move(ids)});
    }
    return out;
}

struct CandidateMatch {
    TopologicalTriple candidate;
    std::vector<std::int64_t> cy_numbers; // empty when unmatched
};

inline std::vector<CandidateMatch>
match_candidates(const std::vector<CatalogEntry>& entries,
                 const std::vector<TopologicalTriple>& candidates) {
    std::vector<CandidateMatch> out;
    for (const auto& cand : candidates) {
        CandidateMatch m{cand, {}};
        for (const auto& e : entries)
            if (e.triple() == cand)
                m.cy_numbers.push_back(e.cy_number);
        std::sort(m.cy_numbers.begin(), m.cy_numbers.end());
        out.push_back(std::move(m));
    }
    return out;
}

// Candidate file: CSV with header H3,c2H,e. Lines starting with '#' are
// provenance notes and are skipped.
inline std::vector<TopologicalTriple> load_candidates_csv(std::istream& in) {
    std::vector<TopologicalTriple> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = csv::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true; // H3,c2H,e
            continue;
        }
        auto fields = csv::split_line(line, lineno);
        if (fields.size() < 3)
            throw ParseError(lineno, "expected H3,c2H,e");
        out.push_back({detail::parse_int(fields[0], lineno, "H3"),
                       detail::parse_int(fields[1], lineno, "c2H"),
                       detail::parse_int(fields[2], lineno, "e")});
    }
    return out;
}

inline const std::vector<std::string>& cy_table_columns() {
    static const std::vector<std::string> cols = {
        "cy_number", "H3", "c2H", "e", "h11", "h12",
        "fano_ids",  "minus_K3", "N", "e_Y"};
    return cols;
}

inline std::vector<std::string> cy_table_row(const CatalogEntry& e) {
    return {std::to_string(e.cy_number),
            std::to_string(e.invariants.H3),
            std::to_string(e.invariants.c2H),
            std::to_string(e.invariants.e),
            std::to_string(e.invariants.h11),
            std::to_string(e.invariants.h12),
            detail::join_ids(e.record.fano_ids),
            e.record.minus_K3.str(),
            std::to_string(e.record.N),
            std::to_string(e.record.e_Y)};
}

inline std::string emit_cy_table(const std::vector<CatalogEntry>& entries,
                                 TableFormat fmt) {
    const auto& cols = cy_table_columns();
    if (fmt == TableFormat::JSON) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json row;
            row["cy_number"] = e.cy_number;
            row["H3"] = e.invariants.H3;
            row["c2H"] = e.invariants.c2H;
            row["e"] = e.invariants.e;
            row["h11"] = e.invariants.h11;
            row["h12"] = e.invariants.h12;
            row["fano_ids"] = e.record.fano_ids;
            row["minus_K3"] = e.record.minus_K3.str();
            row["N"] = e.record.N;
            row["e_Y"] = e.record.e_Y;
            arr.push_back(std::move(row));
        }
        return arr.dump(2) + "\n";
    }
    if (fmt == TableFormat::CSV) {
        std::string out;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ",";
            out += cols[i];
        }
        out += "\n";
        for (const auto& e : entries) {
            auto row = cy_table_row(e);
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ",";
                out += csv::quote_if_needed(row[i]);
            }
            out += "\n";
        }
        return out;
    }
    // ALIGNED_TEXT
    std::vector<std::vector<std::string>> rows;
    rows.push_back(cols);
    for (const auto& e : entries)
        rows.push_back(cy_table_row(e));
    std::vector<std::size_t> width(cols.size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            out.append(width[i] - row[i].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += "\n";
    }
    return out;
}

struct PlotPoint {
    std::int64_t x = 0; // Euler number e
    std::int64_t y = 0; // h11 + h12
    std::string label;
};

inline std::vector<PlotPoint> plot_points(const std::vector<CatalogEntry>& entries) {
    std::vector<PlotPoint> out;
    for (const auto& e : entries)
        out.push_back({e.invariants.e, e.invariants.h11 + e.invariants.h12,
                       "#" + std::to_string(e.cy_number)});
    return out;
}

inline std::string emit_plot_tsv(const std::vector<PlotPoint>& points) {
    std::string out = "e\th11_plus_h12\tlabel\n";
    for (const auto& p : points)
        out += std::to_string(p.x) + "\t" + std::to_string(p.y) + "\t" + p.label + "\n";
    return out;
}

// Scatter SVG with the Euler number horizontal and h11 + h12 vertical.
// Canvas 1500 x 2519; catalog points are big dots, background points small.
inline std::string render_plot_svg(const std::vector<PlotPoint>& catalog_points,
                                   const std::vector<PlotPoint>& background_points) {
    const double width = 1500, height = 2519;
    // Plot frame and axis ranges: x in [-800, 800], y in [0, 400].
    const double x0 = 140, x1 = 1439, y0 = 82, y1 = 2480;
    auto map_x = [&](double e) { return x0 + (e + 800.0) / 1600.0 * (x1 - x0); };
    auto map_y = [&](double h) { return height - (y0 + h / 400.0 * (y1 - y0)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    svg << "<rect x=\"" << x0 << "\" y=\"" << height - y1 << "\" width=\""
        << x1 - x0 << "\" height=\"" << y1 - y0
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int e = -800; e <= 800; e += 200)
        svg << "<text x=\"" << map_x(e) << "\" y=\"" << height - 41
            << "\" text-anchor=\"middle\" font-size=\"28\">" << e << "</text>\n";
    for (int h = 0; h <= 400; h += 50)
        svg << "<text x=\"" << x0 - 20 << "\" y=\"" << map_y(h) + 9
            << "\" text-anchor=\"end\" font-size=\"28\">" << h << "</text>\n";
    svg << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << height - 5
        << "\" text-anchor=\"middle\" font-size=\"32\">e</text>\n";
    svg << "<text x=\"30\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"32\" transform=\"rotate(-90 30 "
        << height / 2 << ")\">h11 + h12</text>\n";
    for (const auto& p : background_points)
        svg << "<circle cx=\"" << map_x(double(p.x)) << "\" cy=\""
            << map_y(double(p.y)) << "\" r=\"2\" fill=\"black\"/>\n";
    for (const auto& p : catalog_points)
        svg << "<circle cx=\"" << map_x(double(p.x)) << "\" cy=\""
            << map_y(double(p.y)) << "\" r=\"8\" fill=\"black\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

// Background file: two whitespace-separated columns e, h11+h12 per line;
// '#' comments allowed.
inline std::vector<PlotPoint> load_background_points(std::istream& in) {
    std::vector<PlotPoint> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = csv::trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::istringstream ss(t);
        std::int64_t x, y;
        if (!(ss >> x >> y))
            throw ParseError(lineno, "expected two integer columns");
        out.push_back({x, y, ""});
    }
    return out;
}

} // namespace cycover
