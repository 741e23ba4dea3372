#include "minkcheb/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace minkcheb::ingest {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(line);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

double parse_finite_real(const std::string& text, const std::string& where) {
    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != strip(text).size() && used != text.size())
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::runtime_error("non-numeric value '" + strip(text) + "' at " + where);
    }
    if (!std::isfinite(value))
        throw std::runtime_error("non-finite value '" + strip(text) + "' at " + where);
    return value;
}

int class_index(Dataset& ds, std::map<std::string, int>& lookup, const std::string& label) {
    auto it = lookup.find(label);
    if (it != lookup.end()) return it->second;
    int index = int(ds.class_table.size());
    ds.class_table.push_back(label);
    lookup.emplace(label, index);
    return index;
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& name,
                  const std::optional<std::string>& label_column) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(name + ": empty file");
    auto header = split(strip(line), ',');
    for (auto& h : header) h = strip(h);
    if (header.size() < 2) throw std::runtime_error(name + ": need at least 2 columns");

    std::size_t label_idx = header.size() - 1;
    if (label_column) {
        auto it = std::find(header.begin(), header.end(), *label_column);
        if (it == header.end())
            throw std::runtime_error(name + ": no column named '" + *label_column + "'");
        label_idx = std::size_t(it - header.begin());
    }

    Dataset ds;
    ds.name = name;
    ds.n_features = header.size() - 1;
    std::map<std::string, int> lookup;

    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        std::string body = strip(line);
        if (body.empty()) continue;
        auto cells = split(body, ',');
        if (cells.size() != header.size())
            throw std::runtime_error(name + ": ragged row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        Instance inst;
        inst.features.reserve(ds.n_features);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c == label_idx) continue;
            std::string where = "row " + std::to_string(row) + ", column '" + header[c] + "'";
            inst.features.push_back(parse_finite_real(cells[c], name + ": " + where));
        }
        inst.label = class_index(ds, lookup, strip(cells[label_idx]));
        ds.instances.push_back(std::move(inst));
    }

    if (ds.instances.empty()) throw std::runtime_error(name + ": no instances");
    if (ds.class_table.size() < 2)
        throw std::runtime_error(name + ": fewer than 2 classes present");
    ds.validate();
    return ds;
}

Dataset parse_arff(std::istream& in, const std::string& name) {
    struct Attribute {
        std::string name;
        bool numeric = false;
        std::vector<std::string> values;  // nominal only
    };
    std::vector<Attribute> attributes;
    std::string line;
    bool in_data = false;

    Dataset ds;
    ds.name = name;
    std::size_t row = 0;

    while (std::getline(in, line)) {
        ++row;
        std::string body = strip(line);
        if (body.empty() || body[0] == '%') continue;

        if (!in_data && body[0] == '@') {
            std::istringstream parts(body);
            std::string keyword;
            parts >> keyword;
            keyword = lower(keyword);
            if (keyword == "@relation") continue;
            if (keyword == "@data") {
                if (attributes.size() < 2)
                    throw std::runtime_error(name + ": need features and a class attribute");
                for (std::size_t a = 0; a + 1 < attributes.size(); ++a)
                    if (!attributes[a].numeric)
                        throw std::runtime_error(name + ": categorical attributes unsupported ('" +
                                                 attributes[a].name + "')");
                const Attribute& cls = attributes.back();
                if (cls.numeric || cls.values.size() < 2)
                    throw std::runtime_error(name +
                                             ": last attribute must be nominal with >= 2 values");
                ds.class_table = cls.values;
                ds.n_features = attributes.size() - 1;
                in_data = true;
                continue;
            }
            if (keyword == "@attribute") {
                Attribute attr;
                parts >> attr.name;
                std::string rest;
                std::getline(parts, rest);
                rest = strip(rest);
                if (lower(rest) == "numeric" || lower(rest) == "real" ||
                    lower(rest) == "integer") {
                    attr.numeric = true;
                } else if (!rest.empty() && rest.front() == '{' && rest.back() == '}') {
                    for (auto& v : split(rest.substr(1, rest.size() - 2), ','))
                        attr.values.push_back(strip(v));
                } else {
                    throw std::runtime_error(name + ": categorical attributes unsupported ('" +
                                             attr.name + "' is '" + rest + "')");
                }
                attributes.push_back(std::move(attr));
                continue;
            }
            throw std::runtime_error(name + ": unknown ARFF keyword '" + keyword + "'");
        }

        if (!in_data)
            throw std::runtime_error(name + ": data before @data section at row " +
                                     std::to_string(row));

        auto cells = split(body, ',');
        if (cells.size() != attributes.size())
            throw std::runtime_error(name + ": row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " fields, expected " +
                                     std::to_string(attributes.size()));
        Instance inst;
        inst.features.reserve(ds.n_features);
        for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
            std::string cell = strip(cells[c]);
            if (cell == "?")
                throw std::runtime_error(name + ": missing value at row " + std::to_string(row));
            inst.features.push_back(
                parse_finite_real(cell, name + ": row " + std::to_string(row)));
        }
        std::string label = strip(cells.back());
        if (label == "?")
            throw std::runtime_error(name + ": missing class at row " + std::to_string(row));
        auto it = std::find(ds.class_table.begin(), ds.class_table.end(), label);
        if (it == ds.class_table.end())
            throw std::runtime_error(name + ": undeclared class '" + label + "' at row " +
                                     std::to_string(row));
        inst.label = int(it - ds.class_table.begin());
        ds.instances.push_back(std::move(inst));
    }

    if (!in_data) throw std::runtime_error(name + ": missing @data section");
    if (ds.instances.empty()) throw std::runtime_error(name + ": no instances");
    ds.validate();
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : lower(path.substr(dot + 1));
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    if (auto bdot = base.rfind('.'); bdot != std::string::npos) base = base.substr(0, bdot);
    if (ext == "csv") return parse_csv(in, base);
    if (ext == "arff") return parse_arff(in, base);
    throw std::runtime_error(path + ": unsupported extension '" + ext + "'");
}

Dataset minmax_rescale(const Dataset& dataset) {
    if (dataset.instances.empty()) throw std::invalid_argument("empty dataset");
    Dataset out = dataset;
    for (std::size_t c = 0; c < dataset.n_features; ++c) {
        double lo = dataset.instances.front().features[c];
        double hi = lo;
        for (const auto& inst : dataset.instances) {
            lo = std::min(lo, inst.features[c]);
            hi = std::max(hi, inst.features[c]);
        }
        double span = hi - lo;
        for (auto& inst : out.instances)
            inst.features[c] = span > 0.0 ? (inst.features[c] - lo) / span : 0.0;
    }
    return out;
}

std::string to_csv(const Dataset& dataset) {
    std::ostringstream out;
    for (std::size_t c = 0; c < dataset.n_features; ++c) out << 'f' << c << ',';
    out << "class\n";
    char buf[64];
    for (const auto& inst : dataset.instances) {
        for (double v : inst.features) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << buf << ',';
        }
        out << dataset.class_table[std::size_t(inst.label)] << '\n';
    }
    return out.str();
}

}  // namespace minkcheb::ingest
